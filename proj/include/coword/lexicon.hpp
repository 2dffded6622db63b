// Word dictionary for maximum-matching segmentation.
//
// Lexicon files are UTF-8, one entry per line, either `surface` or
// `surface<TAB>weight`. Blank lines and lines starting with `#` are
// skipped; an optional leading BOM is stripped. Surfaces are NFC-normalized
// at load and must not contain whitespace.
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "coword/error.hpp"
#include "coword/unicode.hpp"

namespace coword {

struct LexiconEntry {
    std::string surface;
    std::uint64_t weight = 1;
};

namespace detail {

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
        return std::hash<std::string_view>{}(s);
    }
    std::size_t operator()(const std::string& s) const {
        return std::hash<std::string_view>{}(s);
    }
};

}  // namespace detail

class Lexicon {
  public:
    using Map = std::unordered_map<std::string, std::uint64_t, detail::StringHash,
                                   std::equal_to<>>;

    // Returns false if the surface is already present.
    bool insert(std::string surface, std::uint64_t weight) {
        const auto len = decode_utf8_lenient(surface).size();
        auto [it, inserted] = entries_.emplace(std::move(surface), weight);
        if (inserted && len > max_len_) max_len_ = len;
        return inserted;
    }

    bool contains(std::string_view surface) const { return entries_.find(surface) != entries_.end(); }

    std::optional<std::uint64_t> weight(std::string_view surface) const {
        auto it = entries_.find(surface);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t size() const { return entries_.size(); }
    // Character (codepoint) count of the longest surface; 0 when empty.
    std::size_t max_len() const { return max_len_; }
    const Map& entries() const { return entries_; }

  private:
    Map entries_;
    std::size_t max_len_ = 0;
};

inline std::string_view strip_bom(std::string_view text) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    return text;
}

inline Lexicon load_lexicon(std::string_view source) {
    if (auto bad = validate_utf8(source)) {
        throw Error("lexicon: invalid UTF-8 at byte offset " + std::to_string(*bad));
    }
    source = strip_bom(source);

    Lexicon lex;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        const auto eol = source.find('\n', pos);
        std::string_view line = source.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                                 : eol - pos);
        pos = eol == std::string_view::npos ? source.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        std::string_view surface_part = line;
        std::uint64_t weight = 1;
        if (const auto tab = line.find('\t'); tab != std::string_view::npos) {
            surface_part = line.substr(0, tab);
            const std::string_view weight_part = line.substr(tab + 1);
            if (weight_part.empty() || weight_part.front() == '-') {
                throw Error("lexicon line " + std::to_string(line_no) +
                            ": weight must be a nonnegative integer, got '" +
                            std::string(weight_part) + "'");
            }
            const auto res = std::from_chars(weight_part.data(),
                                             weight_part.data() + weight_part.size(), weight);
            if (res.ec != std::errc{} || res.ptr != weight_part.data() + weight_part.size()) {
                throw Error("lexicon line " + std::to_string(line_no) +
                            ": weight must be a nonnegative integer, got '" +
                            std::string(weight_part) + "'");
            }
        }
        if (surface_part.empty()) {
            throw Error("lexicon line " + std::to_string(line_no) + ": empty surface");
        }
        std::string surface = nfc_utf8(surface_part);
        for (char32_t cp : decode_utf8_lenient(surface)) {
            if (char_class(cp) == CharClass::space) {
                throw Error("lexicon line " + std::to_string(line_no) +
                            ": surface contains whitespace");
            }
        }
        if (!lex.insert(std::move(surface), weight)) {
            throw Error("lexicon line " + std::to_string(line_no) + ": duplicate surface '" +
                        nfc_utf8(surface_part) + "'");
        }
    }
    return lex;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error("I/O error reading file: " + path);
    return std::move(buf).str();
}

inline Lexicon load_lexicon_file(const std::string& path) {
    try {
        return load_lexicon(read_file(path));
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

}  // namespace coword
