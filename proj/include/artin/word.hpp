#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "artin/defining_graph.hpp"

namespace artin {

// A generator or its inverse. Letters order by generator, then s before s^-1.
struct Letter {
  VertexId gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word power(VertexId gen, int exponent);  // gen^exponent, empty for 0
Word concat(Word lhs, const Word& rhs);

// "s t^-1 s^2"; the empty word is "1".
std::string format_word(const DefiningGraph& g, const Word& w);

// Accepts space-separated tokens "s", "s^-1", "s^3", and "1" for the
// identity. Throws PreconditionError(UnknownVertex) on an unknown name and
// std::invalid_argument on a malformed exponent.
Word parse_word(const DefiningGraph& g, std::string_view text);

// A vertex g A_T of the clique-cube complex, with g kept as an unreduced
// word. Two symbolic vertices may name the same coset.
struct SymbolicVertex {
  Word word;
  VertexSet clique = 0;
  friend bool operator==(const SymbolicVertex&, const SymbolicVertex&) = default;
};

std::string format_vertex(const DefiningGraph& g, const SymbolicVertex& v);  // "s t A_{a,b}"

}  // namespace artin
