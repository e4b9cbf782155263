#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/error.hpp"

namespace artin {

// Generators are identified by their position in declaration order.
using VertexId = std::size_t;

// Subsets of the generating set, bit i <-> generator i.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

constexpr VertexSet singleton(VertexId v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet set, VertexId v) { return (set >> v) & 1U; }
constexpr std::size_t cardinality(VertexSet set) { return static_cast<std::size_t>(std::popcount(set)); }
constexpr VertexId lowest(VertexSet set) { return static_cast<VertexId>(std::countr_zero(set)); }

std::vector<VertexId> members(VertexSet set);

// Order on vertex subsets used for every reported list: by size, then by the
// ascending member list compared lexicographically.
bool canonical_less(VertexSet lhs, VertexSet rhs);

struct Edge {
  VertexId a;  // a < b
  VertexId b;
  int label;   // m_ab >= 2

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A finite simplicial graph with integer edge labels >= 2. A missing edge is
// the label infinity; there is no other encoding for it.
class DefiningGraph {
 public:
  // Throws std::invalid_argument on any violated invariant. The readers in
  // parse_graph() perform the same checks with line-numbered diagnostics.
  DefiningGraph(std::vector<std::string> names, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId index_of(std::string_view name) const;  // throws UnknownVertex

  VertexSet all() const noexcept;
  bool adjacent(VertexId u, VertexId v) const { return contains(neighbors_.at(u), v); }
  std::optional<int> label(VertexId u, VertexId v) const;
  VertexSet neighbors(VertexId v) const { return neighbors_.at(v); }

  // Sorted by (a, b).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool is_clique(VertexSet set) const;
  bool right_angled() const;
  std::string format_set(VertexSet set) const;  // "{a,b}"

  friend bool operator==(const DefiningGraph& lhs, const DefiningGraph& rhs) {
    return lhs.names_ == rhs.names_ && lhs.edges_ == rhs.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> neighbors_;
  std::vector<int> labels_;  // dense size()*size(); 0 = no edge
};

// Unlabeled graph on the same vertex set as the defining graph.
struct SimpleGraph {
  std::vector<VertexSet> adjacency;

  std::size_t size() const noexcept { return adjacency.size(); }
  bool adjacent(VertexId u, VertexId v) const { return contains(adjacency[u], v); }
  std::size_t edge_count() const;
};

enum class GraphFormat { Text, Json };

// Reads the line format or, if the first non-blank character is '{', the
// JSON format. Throws ParseError.
DefiningGraph parse_graph(std::string_view text);
DefiningGraph parse_graph_text(std::string_view text);
DefiningGraph parse_graph_json(std::string_view text);
std::string emit_graph(const DefiningGraph& g, GraphFormat format);

SimpleGraph underlying(const DefiningGraph& g);
SimpleGraph complement(const DefiningGraph& g);
VertexSet link(const DefiningGraph& g, VertexId s);
VertexSet star(const DefiningGraph& g, VertexId s);

// Connected components ordered by their least vertex.
std::vector<VertexSet> components(const SimpleGraph& graph);

struct JoinFactors {
  VertexSet first;
  VertexSet second;
  friend bool operator==(const JoinFactors&, const JoinFactors&) = default;
};

struct Classification {
  bool is_clique = false;
  std::optional<VertexId> star_center;
  std::optional<JoinFactors> join_factors;
};

// join_factors is (smallest complement component, everything else); ties
// between equally small components go to the one with the least vertex.
Classification classify(const DefiningGraph& g);

struct Clique {
  VertexSet members = 0;
  bool maximal = false;
  friend bool operator==(const Clique&, const Clique&) = default;
};

// Every clique, the empty one included, in canonical_less order.
std::vector<Clique> enumerate_cliques(const DefiningGraph& g);
std::vector<VertexSet> maximal_cliques(const DefiningGraph& g);

// Parses "a,b,c" (or "" for the empty set) against g's names.
VertexSet parse_vertex_list(const DefiningGraph& g, std::string_view list);

}  // namespace artin
