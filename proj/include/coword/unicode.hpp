// UTF-8 handling, character classification, and canonical (NFC)
// normalization backed by the generated tables in unicode_tables.hpp.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coword/unicode_tables.hpp"

namespace coword {

inline constexpr char32_t k_replacement_char = 0xFFFD;

// Collapsed general-category groups; values match gen_unicode_tables.py.
enum class CharClass : std::uint8_t {
    other = 0,
    letter = 1,
    mark = 2,
    digit = 3,
    number = 4,
    punctuation = 5,
    symbol = 6,
    space = 7,
    control = 8,
};

inline CharClass char_class(char32_t cp) {
    const auto* begin = std::begin(detail::k_class_ranges);
    const auto* end = std::end(detail::k_class_ranges);
    auto it = std::upper_bound(begin, end, cp, [](char32_t v, const detail::ClassRange& r) {
        return v < r.first;
    });
    if (it == begin) return CharClass::other;
    --it;
    if (cp <= it->last) return static_cast<CharClass>(it->cls);
    return CharClass::other;
}

// CJK Unified Ideographs (base block, extensions, compatibility blocks)
// plus U+3007 (ideographic zero), which titles use in years.
inline bool is_han(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF) ||
           (cp >= 0x3400 && cp <= 0x4DBF) ||
           cp == 0x3007 ||
           (cp >= 0xF900 && cp <= 0xFAFF) ||
           (cp >= 0x20000 && cp <= 0x2A6DF) ||
           (cp >= 0x2A700 && cp <= 0x2EBEF) ||
           (cp >= 0x2F800 && cp <= 0x2FA1F) ||
           (cp >= 0x30000 && cp <= 0x323AF);
}

inline bool is_alphabetic(char32_t cp) {
    return char_class(cp) == CharClass::letter && !is_han(cp);
}

inline bool is_decimal_digit(char32_t cp) {
    return char_class(cp) == CharClass::digit;
}

inline char32_t to_lower(char32_t cp) {
    const auto* begin = std::begin(detail::k_lowercase_map);
    const auto* end = std::end(detail::k_lowercase_map);
    auto it = std::lower_bound(begin, end, cp, [](const detail::CasePair& p, char32_t v) {
        return p.cp < v;
    });
    if (it != end && it->cp == cp) return it->lower;
    return cp;
}

inline std::uint8_t combining_class(char32_t cp) {
    const auto* begin = std::begin(detail::k_ccc_ranges);
    const auto* end = std::end(detail::k_ccc_ranges);
    auto it = std::upper_bound(begin, end, cp, [](char32_t v, const detail::CccRange& r) {
        return v < r.first;
    });
    if (it == begin) return 0;
    --it;
    return cp <= it->last ? it->ccc : 0;
}

// ---- UTF-8 ----------------------------------------------------------------

// Returns the byte offset of the first invalid sequence, or nullopt if the
// input is well-formed UTF-8 (overlongs, surrogates, and >U+10FFFF rejected).
inline std::optional<std::size_t> validate_utf8(std::string_view bytes) {
    std::size_t i = 0;
    const auto n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        char32_t cp;
        if (b0 < 0x80) {
            ++i;
            continue;
        } else if ((b0 >> 5) == 0x6) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 >> 4) == 0xE) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 >> 3) == 0x1E) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            return i;
        }
        if (i + len > n) return i;
        for (std::size_t k = 1; k < len; ++k) {
            const auto bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk >> 6) != 0x2) return i;
            cp = (cp << 6) | (bk & 0x3F);
        }
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000))
            return i;  // overlong
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
        i += len;
    }
    return std::nullopt;
}

// Decodes UTF-8, substituting U+FFFD for each byte of an invalid sequence.
inline std::u32string decode_utf8_lenient(std::string_view bytes) {
    std::u32string cps;
    cps.reserve(bytes.size());
    std::size_t i = 0;
    const auto n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        char32_t cp;
        if (b0 < 0x80) {
            cps.push_back(b0);
            ++i;
            continue;
        } else if ((b0 >> 5) == 0x6) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 >> 4) == 0xE) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 >> 3) == 0x1E) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            cps.push_back(k_replacement_char);
            ++i;
            continue;
        }
        bool ok = i + len <= n;
        for (std::size_t k = 1; ok && k < len; ++k) {
            const auto bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk >> 6) != 0x2) {
                ok = false;
            } else {
                cp = (cp << 6) | (bk & 0x3F);
            }
        }
        if (ok && ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                   (len == 4 && cp < 0x10000)))
            ok = false;
        if (ok && (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) ok = false;
        if (!ok) {
            cps.push_back(k_replacement_char);
            ++i;
            continue;
        }
        cps.push_back(cp);
        i += len;
    }
    return cps;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode_utf8(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size() * 3);
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

// ---- NFC ------------------------------------------------------------------

namespace detail {

constexpr char32_t k_hangul_s_base = 0xAC00;
constexpr char32_t k_hangul_l_base = 0x1100;
constexpr char32_t k_hangul_v_base = 0x1161;
constexpr char32_t k_hangul_t_base = 0x11A7;
constexpr int k_hangul_l_count = 19;
constexpr int k_hangul_v_count = 21;
constexpr int k_hangul_t_count = 28;
constexpr int k_hangul_n_count = k_hangul_v_count * k_hangul_t_count;
constexpr int k_hangul_s_count = k_hangul_l_count * k_hangul_n_count;

inline bool is_hangul_syllable(char32_t cp) {
    return cp >= k_hangul_s_base && cp < k_hangul_s_base + k_hangul_s_count;
}

inline void decompose_canonical(char32_t cp, std::u32string& out) {
    if (is_hangul_syllable(cp)) {
        const int index = static_cast<int>(cp - k_hangul_s_base);
        out.push_back(k_hangul_l_base + index / k_hangul_n_count);
        out.push_back(k_hangul_v_base + (index % k_hangul_n_count) / k_hangul_t_count);
        if (index % k_hangul_t_count != 0)
            out.push_back(k_hangul_t_base + index % k_hangul_t_count);
        return;
    }
    const auto* begin = std::begin(k_nfd_map);
    const auto* end = std::end(k_nfd_map);
    auto it = std::lower_bound(begin, end, cp, [](const DecompEntry& e, char32_t v) {
        return e.cp < v;
    });
    if (it != end && it->cp == cp) {
        for (std::uint8_t k = 0; k < it->len; ++k) out.push_back(k_nfd_pool[it->offset + k]);
        return;
    }
    out.push_back(cp);
}

inline std::optional<char32_t> compose_pair(char32_t a, char32_t b) {
    // Hangul LV and LVT composition.
    if (a >= k_hangul_l_base && a < k_hangul_l_base + k_hangul_l_count &&
        b >= k_hangul_v_base && b < k_hangul_v_base + k_hangul_v_count) {
        return k_hangul_s_base + ((a - k_hangul_l_base) * k_hangul_n_count) +
               (b - k_hangul_v_base) * k_hangul_t_count;
    }
    if (is_hangul_syllable(a) && (a - k_hangul_s_base) % k_hangul_t_count == 0 &&
        b > k_hangul_t_base && b < k_hangul_t_base + k_hangul_t_count) {
        return a + (b - k_hangul_t_base);
    }
    const auto* begin = std::begin(k_composition_map);
    const auto* end = std::end(k_composition_map);
    auto it = std::lower_bound(begin, end, std::pair<char32_t, char32_t>{a, b},
                               [](const CompEntry& e, const std::pair<char32_t, char32_t>& v) {
                                   return e.first != v.first ? e.first < v.first
                                                             : e.second < v.second;
                               });
    if (it != end && it->first == a && it->second == b) return it->composed;
    return std::nullopt;
}

}  // namespace detail

inline std::u32string nfc(std::u32string_view input) {
    // 1. Canonical decomposition.
    std::u32string decomposed;
    decomposed.reserve(input.size() + 8);
    for (char32_t cp : input) detail::decompose_canonical(cp, decomposed);

    // 2. Canonical ordering of combining marks (stable bubble pass).
    for (std::size_t i = 1; i < decomposed.size(); ++i) {
        const auto ccc = combining_class(decomposed[i]);
        if (ccc == 0) continue;
        std::size_t j = i;
        while (j > 0 && combining_class(decomposed[j - 1]) > ccc) {
            std::swap(decomposed[j - 1], decomposed[j]);
            --j;
        }
    }

    // 3. Canonical composition.
    std::u32string out;
    out.reserve(decomposed.size());
    std::ptrdiff_t last_starter = -1;
    int last_starter_trailing_ccc = 0;  // highest ccc seen since the starter
    for (char32_t cp : decomposed) {
        const int ccc = combining_class(cp);
        if (last_starter >= 0) {
            const bool blocked = ccc == 0 ? out.size() != static_cast<std::size_t>(last_starter) + 1
                                          : last_starter_trailing_ccc >= ccc;
            if (!blocked) {
                if (auto composed = detail::compose_pair(out[last_starter], cp)) {
                    out[last_starter] = *composed;
                    continue;
                }
            }
        }
        if (ccc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size());
            last_starter_trailing_ccc = 0;
        } else {
            last_starter_trailing_ccc = ccc;
        }
        out.push_back(cp);
    }
    return out;
}

inline std::string nfc_utf8(std::string_view utf8) {
    return encode_utf8(nfc(decode_utf8_lenient(utf8)));
}

}  // namespace coword
