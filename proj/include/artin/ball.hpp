#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/defining_graph.hpp"
#include "artin/flag_links.hpp"
#include "artin/word.hpp"
#include "json.hpp"

namespace artin {

// Right-angled Artin group words (every label 2, or no edges at all).
//
// The normal form is the lexicographically least word among the reduced
// words representing the same element: free cancellation across commuting
// letters, then the greedy least-letter reading of the commutation class.
// Throws PreconditionError(NotRightAngled).
Word normal_form_raag(const DefiningGraph& g, const Word& w);

// A vertex g A_T; rep is the normal form of the shortest element of the
// coset, so equal cosets compare equal field by field.
struct CosetVertex {
  Word rep;
  VertexSet clique = 0;

  friend bool operator==(const CosetVertex&, const CosetVertex&) = default;
};

struct CosetVertexHash {
  std::size_t operator()(const CosetVertex& v) const noexcept;
};

// Normal form of w, then strip letters of `clique` that commute to the right
// end, until nothing changes. Throws NotRightAngled, or NotAClique when
// `clique` is not a clique of g.
CosetVertex canonical_coset(const DefiningGraph& g, const Word& w, VertexSet clique);

// Vertices canonical_coset(rep, bottom.clique | sub) for sub ranging over the
// subsets of `directions`; corners[m] is the corner whose bit k of m selects
// the k-th direction in ascending order.
struct Cube {
  std::size_t bottom = 0;
  std::size_t top = 0;
  VertexSet directions = 0;
  std::vector<std::size_t> corners;

  std::size_t dimension() const { return cardinality(directions); }
};

// A finite piece of the clique-cube complex around A_emptyset.
//
// A vertex is kept when it is within `radius` edges of A_emptyset along a
// path whose vertices all have representatives of length <= word_budget.
// Vertices are ordered by (distance, rep length, rep, clique).
struct CubeBall {
  std::size_t radius = 0;
  std::size_t word_budget = 0;
  std::vector<CosetVertex> vertices;
  std::vector<std::size_t> distance;
  std::vector<bool> deligne;
  std::vector<std::vector<Cube>> cubes;  // cubes[d - 1] holds the d-dimensional cubes

  std::optional<std::size_t> find(const CosetVertex& v) const;
  std::size_t edge_count() const { return cubes.empty() ? 0 : cubes[0].size(); }
  std::size_t cube_count(std::size_t dimension) const;

  void reindex();

 private:
  std::unordered_map<CosetVertex, std::size_t, CosetVertexHash> index_;
};

// Default budget: radius / 2, the longest word reachable in `radius` edges
// by alternating up and down moves.
std::size_t default_word_budget(std::size_t radius);

// Frontier-parallel (OpenMP) construction. Throws NotRightAngled or
// NegativeRadius. Output is identical to build_ball_serial().
CubeBall build_ball(const DefiningGraph& g, long radius, std::optional<std::size_t> word_budget = {});

// Plain queue-driven BFS; the reference the parallel version is tested against.
CubeBall build_ball_serial(const DefiningGraph& g, long radius, std::optional<std::size_t> word_budget = {});

struct LinkIsomorphism {
  bool isomorphic = false;
  SimplicialComplex link;  // lk(A_emptyset), vertices named by edge label
  std::string detail;
};

// Builds lk(A_emptyset) from the cubes at A_emptyset and matches it with
// flag_complex(g) through edge labels.
LinkIsomorphism verify_link_base(const DefiningGraph& g, const CubeBall& ball);

// Combinatorial link of any ball vertex: one link vertex per incident edge
// (named by the neighbour), one simplex per cube at the vertex. Throws
// std::invalid_argument if the vertex has more than 64 neighbours.
SimplicialComplex vertex_link(const DefiningGraph& g, const CubeBall& ball, std::size_t vertex);

// A_T is of finite type.
bool deligne_flag(const DefiningGraph& g, VertexSet clique);

// Sets ball.deligne from the vertices' cliques.
CubeBall& mark_deligne(const DefiningGraph& g, CubeBall& ball);

nlohmann::ordered_json ball_to_json(const DefiningGraph& g, const CubeBall& ball);
std::string ball_to_dot(const DefiningGraph& g, const CubeBall& ball);

}  // namespace artin
