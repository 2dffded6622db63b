#!/usr/bin/env python3
"""Regenerates include/coword/unicode_tables.hpp from Python's unicodedata.

Emits four tables:
  * general-category class ranges (collapsed to the groups the tokenizer uses)
  * simple lowercase mappings (single-codepoint results only)
  * nonzero canonical combining classes
  * full canonical decompositions (NFD) and primary composition pairs

Hangul syllables (U+AC00..U+D7A3) are excluded; they are handled
algorithmically at runtime.

Usage: python3 tools/gen_unicode_tables.py > include/coword/unicode_tables.hpp
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172

# Class codes; must match coword::CharClass in unicode.hpp.
CLS_OTHER = 0
CLS_LETTER = 1
CLS_MARK = 2
CLS_DIGIT = 3
CLS_NUMBER = 4
CLS_PUNCT = 5
CLS_SYMBOL = 6
CLS_SPACE = 7
CLS_CONTROL = 8

CATEGORY_TO_CLASS = {
    "Lu": CLS_LETTER, "Ll": CLS_LETTER, "Lt": CLS_LETTER,
    "Lm": CLS_LETTER, "Lo": CLS_LETTER,
    "Mn": CLS_MARK, "Mc": CLS_MARK, "Me": CLS_MARK,
    "Nd": CLS_DIGIT,
    "Nl": CLS_NUMBER, "No": CLS_NUMBER,
    "Pc": CLS_PUNCT, "Pd": CLS_PUNCT, "Ps": CLS_PUNCT, "Pe": CLS_PUNCT,
    "Pi": CLS_PUNCT, "Pf": CLS_PUNCT, "Po": CLS_PUNCT,
    "Sm": CLS_SYMBOL, "Sc": CLS_SYMBOL, "Sk": CLS_SYMBOL, "So": CLS_SYMBOL,
    "Zs": CLS_SPACE, "Zl": CLS_SPACE, "Zp": CLS_SPACE,
    "Cc": CLS_CONTROL, "Cf": CLS_CONTROL, "Co": CLS_CONTROL,
    "Cs": CLS_CONTROL, "Cn": CLS_OTHER,
}

# ASCII control whitespace and NEL count as spaces for tokenization.
FORCED_SPACE = set(range(0x09, 0x0E)) | {0x85}


def char_class(cp: int) -> int:
    if cp in FORCED_SPACE:
        return CLS_SPACE
    cat = unicodedata.category(chr(cp))
    return CATEGORY_TO_CLASS.get(cat, CLS_OTHER)


def class_ranges():
    ranges = []
    start = 0
    cur = char_class(0)
    for cp in range(1, MAX_CP):
        cls = char_class(cp)
        if cls != cur:
            if cur != CLS_OTHER:
                ranges.append((start, cp - 1, cur))
            start = cp
            cur = cls
    if cur != CLS_OTHER:
        ranges.append((start, MAX_CP - 1, cur))
    return ranges


def lowercase_pairs():
    pairs = []
    for cp in range(MAX_CP):
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            pairs.append((cp, ord(lo)))
    return pairs


def ccc_ranges():
    ranges = []
    start = None
    cur = 0
    for cp in range(MAX_CP):
        ccc = unicodedata.combining(chr(cp))
        if ccc != cur:
            if cur != 0:
                ranges.append((start, cp - 1, cur))
            start = cp
            cur = ccc
    if cur != 0:
        ranges.append((start, MAX_CP - 1, cur))
    return ranges


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def nfd_entries():
    entries = []
    pool = []
    for cp in range(MAX_CP):
        if is_hangul_syllable(cp):
            continue
        nfd = unicodedata.normalize("NFD", chr(cp))
        if nfd == chr(cp):
            continue
        expansion = [ord(c) for c in nfd]
        entries.append((cp, len(pool), len(expansion)))
        pool.extend(expansion)
    return entries, pool


def first_level_decomposition(cp: int):
    raw = unicodedata.decomposition(chr(cp))
    if not raw or raw.startswith("<"):
        return None
    return [int(f, 16) for f in raw.split()]


def composition_pairs():
    pairs = []
    for cp in range(MAX_CP):
        if is_hangul_syllable(cp):
            continue
        decomp = first_level_decomposition(cp)
        if not decomp or len(decomp) != 2:
            continue
        a, b = decomp
        # Recomposition must round-trip; this bakes in the composition
        # exclusions without needing CompositionExclusions.txt.
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            pairs.append((a, b, cp))
    pairs.sort()
    return pairs


def main():
    out = sys.stdout
    ranges = class_ranges()
    lower = lowercase_pairs()
    ccc = ccc_ranges()
    nfd, pool = nfd_entries()
    comp = composition_pairs()

    out.write(
        "// Generated by tools/gen_unicode_tables.py (Python unicodedata, "
        f"Unicode {unicodedata.unidata_version}). Do not edit.\n"
    )
    out.write("#pragma once\n\n#include <cstdint>\n\n")
    out.write("namespace coword::detail {\n\n")

    out.write("struct ClassRange { char32_t first; char32_t last; std::uint8_t cls; };\n")
    out.write(f"inline constexpr ClassRange k_class_ranges[{len(ranges)}] = {{\n")
    for first, last, cls in ranges:
        out.write(f"    {{0x{first:X}, 0x{last:X}, {cls}}},\n")
    out.write("};\n\n")

    out.write("struct CasePair { char32_t cp; char32_t lower; };\n")
    out.write(f"inline constexpr CasePair k_lowercase_map[{len(lower)}] = {{\n")
    for cp, lo in lower:
        out.write(f"    {{0x{cp:X}, 0x{lo:X}}},\n")
    out.write("};\n\n")

    out.write("struct CccRange { char32_t first; char32_t last; std::uint8_t ccc; };\n")
    out.write(f"inline constexpr CccRange k_ccc_ranges[{len(ccc)}] = {{\n")
    for first, last, c in ccc:
        out.write(f"    {{0x{first:X}, 0x{last:X}, {c}}},\n")
    out.write("};\n\n")

    out.write("struct DecompEntry { char32_t cp; std::uint32_t offset; std::uint8_t len; };\n")
    out.write(f"inline constexpr DecompEntry k_nfd_map[{len(nfd)}] = {{\n")
    for cp, offset, length in nfd:
        out.write(f"    {{0x{cp:X}, {offset}, {length}}},\n")
    out.write("};\n\n")

    out.write(f"inline constexpr char32_t k_nfd_pool[{len(pool)}] = {{\n")
    for i in range(0, len(pool), 12):
        chunk = ", ".join(f"0x{c:X}" for c in pool[i:i + 12])
        out.write(f"    {chunk},\n")
    out.write("};\n\n")

    out.write("struct CompEntry { char32_t first; char32_t second; char32_t composed; };\n")
    out.write(f"inline constexpr CompEntry k_composition_map[{len(comp)}] = {{\n")
    for a, b, cp in comp:
        out.write(f"    {{0x{a:X}, 0x{b:X}, 0x{cp:X}}},\n")
    out.write("};\n\n")

    out.write("}  // namespace coword::detail\n")


if __name__ == "__main__":
    main()
