#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sepdfa {

using Letter = std::uint32_t;

// A finite word over {0, ..., alphabet_size-1}; the empty vector is epsilon.
using Word = std::vector<Letter>;

enum class Label : std::uint8_t { Positive, Negative, DontCare };

char label_symbol(Label label);  // '+', '-', '?'

// Lexicographic order on words: the first differing letter decides,
// otherwise the shorter word is smaller. Prefixes precede their extensions.
std::strong_ordering lex_compare(const Word& u, const Word& v);

struct LexLess {
  bool operator()(const Word& u, const Word& v) const { return lex_compare(u, v) < 0; }
};

// Letters joined by single spaces, "ε" for the empty word.
std::string to_string(const Word& w);

}  // namespace sepdfa
