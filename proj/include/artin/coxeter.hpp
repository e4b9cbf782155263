#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "artin/defining_graph.hpp"

namespace artin {

enum class CoxeterFamily { A, B, D, E, F, H, I, Infinite };

// Type of one irreducible component of a Coxeter diagram. Low-rank
// coincidences resolve by family order A < B < D < E < F < H < I, so a
// single edge labeled 3 is A2, labeled 4 is B2, and labeled m >= 5 is I2(m).
struct CoxeterType {
  CoxeterFamily family = CoxeterFamily::Infinite;
  std::size_t rank = 0;
  int dihedral_order = 0;  // m for I2(m), 0 otherwise

  std::string tag() const;  // "A3", "E8", "I2(5)", "INFINITE"
  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

struct DiagramComponent {
  VertexSet vertices = 0;
  CoxeterType type;
  friend bool operator==(const DiagramComponent&, const DiagramComponent&) = default;
};

struct FinitenessVerdict {
  bool finite = true;
  std::vector<DiagramComponent> components;  // ordered by least vertex
  friend bool operator==(const FinitenessVerdict&, const FinitenessVerdict&) = default;
};

// The Coxeter diagram of a clique: the clique's vertices, and an edge for
// every pair whose label is at least 3.
struct CoxeterDiagram {
  VertexSet vertices = 0;
  std::vector<Edge> edges;
};

CoxeterDiagram coxeter_diagram(const DefiningGraph& g, VertexSet clique);

// Row-major symmetric matrix with B_ii = 1 and B_ij = -cos(pi / m_ij), rows in
// ascending vertex order of the clique.
struct CosineMatrix {
  std::size_t n = 0;
  std::vector<double> entries;

  double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

CosineMatrix cosine_matrix(const DefiningGraph& g, VertexSet clique);

// Classifies the diagram given as a dense n-by-n label matrix (row-major,
// symmetric, diagonal ignored, any entry < 3 means "no diagram edge").
// Component vertex sets are over the local indices 0..n-1. This is the exact
// decision procedure behind is_finite_type(); no floating point involved.
FinitenessVerdict classify_labels(std::size_t n, std::span<const int> labels);

// Throws PreconditionError(NotAClique) if clique is not a clique of g.
FinitenessVerdict is_finite_type(const DefiningGraph& g, VertexSet clique);

struct FcTypeResult {
  bool fc = true;
  std::vector<VertexSet> offending_cliques;  // every infinite-type clique, canonical order
};

FcTypeResult is_fc_type(const DefiningGraph& g);

}  // namespace artin
