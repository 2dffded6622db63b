// Dictionary segmentation for unspaced CJK text.
//
// The input is scanned left to right and split into maximal runs by script:
// Han runs are segmented against the lexicon by maximum matching (forward,
// backward, or bidirectional), alphabetic runs and digit runs pass through
// as whole tokens, and whitespace/punctuation/symbols/controls are hard
// delimiters that are discarded. Joining the emitted surfaces therefore
// reproduces the input minus the discarded delimiters.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coword/lexicon.hpp"
#include "coword/unicode.hpp"

namespace coword {

enum class TokenClass : std::uint8_t {
    lexicon_word,  // matched a lexicon surface
    han_fallback,  // single out-of-vocabulary Han character
    latin_word,    // maximal run of non-Han letters (plus trailing marks)
    numeric,       // maximal run of decimal digits
};

struct Token {
    std::string surface;
    TokenClass cls = TokenClass::lexicon_word;

    friend bool operator==(const Token&, const Token&) = default;
};

enum class Strategy : std::uint8_t { forward, backward, bidirectional };

namespace detail {

// Byte offsets of each codepoint within the UTF-8 encoding of `run`,
// plus a trailing end offset.
inline std::vector<std::size_t> utf8_offsets(std::u32string_view run, const std::string& bytes) {
    std::vector<std::size_t> offsets;
    offsets.reserve(run.size() + 1);
    std::size_t off = 0;
    for (char32_t cp : run) {
        offsets.push_back(off);
        off += cp < 0x80 ? 1 : cp < 0x800 ? 2 : cp < 0x10000 ? 3 : 4;
    }
    offsets.push_back(bytes.size());
    return offsets;
}

inline void segment_han_forward(const std::string& bytes, const std::vector<std::size_t>& offs,
                                const Lexicon& lex, std::vector<Token>& out) {
    const std::size_t n = offs.size() - 1;
    std::size_t i = 0;
    while (i < n) {
        std::size_t matched = 0;
        const std::size_t limit = std::min(lex.max_len(), n - i);
        for (std::size_t len = limit; len >= 1; --len) {
            const std::string_view cand(bytes.data() + offs[i], offs[i + len] - offs[i]);
            if (lex.contains(cand)) {
                out.push_back({std::string(cand), TokenClass::lexicon_word});
                matched = len;
                break;
            }
        }
        if (matched == 0) {
            out.push_back({bytes.substr(offs[i], offs[i + 1] - offs[i]), TokenClass::han_fallback});
            matched = 1;
        }
        i += matched;
    }
}

inline void segment_han_backward(const std::string& bytes, const std::vector<std::size_t>& offs,
                                 const Lexicon& lex, std::vector<Token>& out) {
    const std::size_t n = offs.size() - 1;
    std::vector<Token> reversed;
    std::size_t j = n;
    while (j > 0) {
        std::size_t matched = 0;
        const std::size_t limit = std::min(lex.max_len(), j);
        for (std::size_t len = limit; len >= 1; --len) {
            const std::string_view cand(bytes.data() + offs[j - len], offs[j] - offs[j - len]);
            if (lex.contains(cand)) {
                reversed.push_back({std::string(cand), TokenClass::lexicon_word});
                matched = len;
                break;
            }
        }
        if (matched == 0) {
            reversed.push_back({bytes.substr(offs[j - 1], offs[j] - offs[j - 1]),
                                TokenClass::han_fallback});
            matched = 1;
        }
        j -= matched;
    }
    out.insert(out.end(), reversed.rbegin(), reversed.rend());
}

inline void segment_han(std::u32string_view run, const Lexicon& lex, Strategy strategy,
                        std::vector<Token>& out) {
    const std::string bytes = encode_utf8(run);
    const auto offs = utf8_offsets(run, bytes);
    if (strategy == Strategy::forward) {
        segment_han_forward(bytes, offs, lex, out);
        return;
    }
    if (strategy == Strategy::backward) {
        segment_han_backward(bytes, offs, lex, out);
        return;
    }

    std::vector<Token> fwd;
    std::vector<Token> bwd;
    segment_han_forward(bytes, offs, lex, fwd);
    segment_han_backward(bytes, offs, lex, bwd);
    auto fallbacks = [](const std::vector<Token>& ts) {
        std::size_t c = 0;
        for (const auto& t : ts) c += t.cls == TokenClass::han_fallback;
        return c;
    };
    auto total_weight = [&lex](const std::vector<Token>& ts) {
        std::uint64_t w = 0;
        for (const auto& t : ts)
            if (t.cls == TokenClass::lexicon_word) w += lex.weight(t.surface).value_or(0);
        return w;
    };
    // Fewer tokens, then fewer fallbacks, then higher lexicon weight,
    // then the forward result.
    const bool take_backward =
        bwd.size() != fwd.size()       ? bwd.size() < fwd.size()
        : fallbacks(bwd) != fallbacks(fwd) ? fallbacks(bwd) < fallbacks(fwd)
                                           : total_weight(bwd) > total_weight(fwd);
    const auto& chosen = take_backward ? bwd : fwd;
    out.insert(out.end(), chosen.begin(), chosen.end());
}

}  // namespace detail

// Splits `text` into tokens. Total on any input: invalid UTF-8 bytes decode
// to U+FFFD, which classifies as a symbol and is discarded.
inline std::vector<Token> segment(std::string_view text, const Lexicon& lex,
                                  Strategy strategy = Strategy::forward) {
    const std::u32string cps = decode_utf8_lenient(text);
    std::vector<Token> out;

    enum class Run : std::uint8_t { none, han, alpha, digit };
    Run run = Run::none;
    std::size_t run_start = 0;

    auto flush = [&](std::size_t end) {
        if (run == Run::none) return;
        const std::u32string_view body(cps.data() + run_start, end - run_start);
        if (run == Run::han) {
            detail::segment_han(body, lex, strategy, out);
        } else {
            out.push_back({encode_utf8(body),
                           run == Run::alpha ? TokenClass::latin_word : TokenClass::numeric});
        }
        run = Run::none;
    };

    for (std::size_t i = 0; i < cps.size(); ++i) {
        const char32_t cp = cps[i];
        Run want;
        if (is_han(cp)) {
            want = Run::han;
        } else if (is_alphabetic(cp)) {
            want = Run::alpha;
        } else if (is_decimal_digit(cp)) {
            want = Run::digit;
        } else if (char_class(cp) == CharClass::mark && run == Run::alpha) {
            continue;  // combining mark extends the current alphabetic run
        } else {
            flush(i);
            continue;
        }
        if (run != want) {
            flush(i);
            run = want;
            run_start = i;
        }
    }
    flush(cps.size());
    return out;
}

// Counting identity of a token surface: case-folded to lower case.
// Only cased (Latin-script etc.) letters are affected.
inline std::string counting_form(std::string_view surface) {
    std::u32string cps = decode_utf8_lenient(surface);
    for (auto& cp : cps) cp = to_lower(cp);
    return encode_utf8(cps);
}

}  // namespace coword
