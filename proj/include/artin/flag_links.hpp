#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/defining_graph.hpp"

namespace artin {

// A finite simplicial complex on named vertices. Simplices are nonempty
// vertex subsets, stored downward closed and in canonical_less order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Closes `simplices` downward. Throws std::invalid_argument if a simplex
  // mentions a vertex index >= names.size().
  SimplicialComplex(std::vector<std::string> names, const std::vector<VertexSet>& simplices);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<VertexSet>& simplices() const noexcept { return simplices_; }

  bool has_simplex(VertexSet s) const;
  bool adjacent(VertexId u, VertexId v) const;
  std::vector<std::size_t> f_vector() const;  // f[k] = number of k-simplices

  // Every set of pairwise adjacent vertices spans a simplex.
  bool is_flag() const;

  // Same vertex names and the same simplices after matching vertices by name.
  bool same_as_by_name(const SimplicialComplex& other) const;

  std::string to_dot() const;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> simplices_;
  std::vector<VertexSet> adjacency_;
};

// The flag complex spanned by the underlying graph of g: its simplices are
// exactly the nonempty cliques.
SimplicialComplex flag_complex(const DefiningGraph& g);

// Link distances are integer multiples of pi/2, counted in quarter turns.
class QuarterTurns {
 public:
  static QuarterTurns infinite() { return QuarterTurns(); }
  static QuarterTurns of(std::uint32_t count) { return QuarterTurns(count); }

  bool is_infinite() const noexcept { return !count_.has_value(); }
  std::uint32_t count() const { return count_.value(); }
  double radians() const;
  std::string to_string() const;  // "0", "pi/2", "pi", "3pi/2", "inf"

  friend bool operator==(const QuarterTurns&, const QuarterTurns&) = default;
  friend std::strong_ordering operator<=>(const QuarterTurns& lhs, const QuarterTurns& rhs) {
    if (lhs.is_infinite() || rhs.is_infinite()) {
      return static_cast<int>(lhs.is_infinite()) <=> static_cast<int>(rhs.is_infinite());
    }
    return *lhs.count_ <=> *rhs.count_;
  }
  friend QuarterTurns operator+(const QuarterTurns& lhs, const QuarterTurns& rhs) {
    if (lhs.is_infinite() || rhs.is_infinite()) return infinite();
    return of(*lhs.count_ + *rhs.count_);
  }

 private:
  QuarterTurns() = default;
  explicit QuarterTurns(std::uint32_t count) : count_(count) {}
  std::optional<std::uint32_t> count_;
};

// Graph distance in the 1-skeleton, as a multiple of pi/2. Throws
// PreconditionError(UnknownVertex) for out-of-range vertices.
QuarterTurns spherical_vertex_distance(const SimplicialComplex& c, VertexId v, VertexId w);

// (pi/2) * min over (a in first, b in second) of the 1-skeleton distance.
// Throws PreconditionError(NotAClique) if either set is not a simplex.
QuarterTurns simplex_separation_lower_bound(const SimplicialComplex& c, VertexSet first,
                                            VertexSet second);

// One vertex family of lk(A_T): the cosets g A_{T - {s}} below A_T.
struct LinkFamily {
  VertexId generator;
  VertexSet residual;  // T - {generator}
  // Facts carried with every family: distinct members are never adjacent in
  // the link, and s^n A_{T - {s}} (n in Z) are pairwise distinct members.
  bool pairwise_nonadjacent = true;
  bool infinite = true;
};

struct LinkPartition {
  VertexSet clique;
  std::vector<LinkFamily> families;  // one per generator of the clique, ascending
  VertexSet upward = 0;              // x with clique + {x} a clique: the vertices A_{T+{x}}
};

// Throws PreconditionError(EmptyClique / NotAClique).
LinkPartition link_partition_at(const DefiningGraph& g, VertexSet clique);

}  // namespace artin
