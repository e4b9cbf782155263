#pragma once

#include <cstddef>
#include <vector>

#include "artin/cube_paths.hpp"
#include "artin/defining_graph.hpp"

namespace artin {

enum class WitnessKind { Loxodromic, FullCover };

// A power s^e of one generator inside a cyclically reduced witness word.
struct Syllable {
  VertexId gen = 0;
  int exponent = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// One period of the axis of g = s_1^e_1 ... s_k^e_k through A_emptyset:
//   A_0, A_{s_1}, g_1 A_0, g_1 A_{s_2}, g_2 A_0, ..., g A_0
// i.e. (up s_i, down s_i^e_i) for each syllable.
EdgePath axis_path(const std::vector<Syllable>& syllables);

// `periods` back-to-back copies of a periodic axis, starting at its base.
EdgePath unroll(const EdgePath& period, std::size_t periods);

struct WitnessWord {
  WitnessKind kind = WitnessKind::Loxodromic;
  std::vector<VertexId> letters;  // s_1 ... s_k
  EdgePath axis;                  // one period starting at A_emptyset
  bool periodic = true;
};

struct WitnessChecks {
  bool consecutive_nonadjacent = false;  // d(s_i, s_i+1) > 1
  bool wraparound_nonadjacent = false;   // d(s_k, s_1) > 1
  bool covers_all_generators = false;
  bool empty_common_link = false;        // intersection of lk(s_i) is empty
  GeodesyCertificate axis_certificate;   // over two periods, so the wraparound corner is included
  bool consecutive_noncrossing = false;  // hyperplane labels, cyclically
  bool pairwise_noncrossing = false;     // stronger label-level check, reported only

  // The predicates required of the given kind.
  bool valid(WitnessKind kind) const;
};

WitnessChecks check_witness(const DefiningGraph& g, const WitnessWord& w);

// The lexicographically least non-adjacent pair (s, t), as letters (s, t).
// Throws PreconditionError(CliqueGraph).
WitnessWord loxodromic_word(const DefiningGraph& g);

// A closed walk in the complement graph through every vertex: the Euler
// tour of a depth-first spanning tree rooted at the first vertex, children in
// declaration order. Throws TooFewVertices or JoinGraph.
WitnessWord full_cover_word(const DefiningGraph& g);

// Where two axes through a common vertex leave along distinct edges with
// the same label; such edges never span a cube.
struct DivergenceNote {
  SymbolicVertex at;
  PathStep g_edge;
  PathStep h_edge;
  bool same_label = false;
  bool distinct_edges = false;
};

// Hyperplanes crossed by the axis of g at step indices `before` < 0 and
// `after` >= period length, i.e. on either side of the segment [x, gx].
struct HyperplanePair {
  long before_index = 0;
  HyperplaneType before;
  long after_index = 0;
  HyperplaneType after;
};

struct AcylWitness {
  WitnessWord g;
  std::vector<VertexId> h_letters;  // s_1 s_1 s_2 ... s_k
  EdgePath h_axis;                  // one period of the axis of h = s_1^2 s_2 ... s_k
  DivergenceNote positive;          // at y = A_{s_1}
  DivergenceNote negative;          // at g^-1 y = h^-1 y
  bool negative_base_shared = false;
  HyperplanePair hyperplanes;
  WitnessChecks g_checks;
  GeodesyCertificate h_certificate;
  bool h_consecutive_noncrossing = false;
  bool h_pairwise_noncrossing = false;

  bool valid() const;
};

// Throws TooFewVertices or JoinGraph.
AcylWitness acyl_witness(const DefiningGraph& g);

}  // namespace artin
