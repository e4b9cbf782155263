#include "artin/flag_links.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace artin {

SimplicialComplex::SimplicialComplex(std::vector<std::string> names,
                                     const std::vector<VertexSet>& simplices)
    : names_(std::move(names)) {
  if (names_.size() > kMaxVertices) throw std::invalid_argument("complex has more than 64 vertices");
  const VertexSet everything = names_.size() == kMaxVertices ? ~VertexSet{0} : singleton(names_.size()) - 1;
  std::unordered_set<VertexSet> closed;
  for (auto s : simplices) {
    if ((s & ~everything) != 0) throw std::invalid_argument("simplex refers to an unknown vertex");
    if (s == 0 || closed.contains(s)) continue;
    for (VertexSet sub = s; sub != 0; sub = (sub - 1) & s) closed.insert(sub);
  }
  for (VertexId v = 0; v < names_.size(); ++v) closed.insert(singleton(v));
  simplices_.assign(closed.begin(), closed.end());
  std::sort(simplices_.begin(), simplices_.end(), canonical_less);

  adjacency_.assign(names_.size(), 0);
  for (auto s : simplices_) {
    if (cardinality(s) != 2) continue;
    const auto a = lowest(s);
    const auto b = lowest(s & (s - 1));
    adjacency_[a] |= singleton(b);
    adjacency_[b] |= singleton(a);
  }
}

bool SimplicialComplex::has_simplex(VertexSet s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, canonical_less);
}

bool SimplicialComplex::adjacent(VertexId u, VertexId v) const {
  return contains(adjacency_.at(u), v);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (auto s : simplices_) {
    const auto dim = cardinality(s) - 1;
    if (f.size() <= dim) f.resize(dim + 1, 0);
    ++f[dim];
  }
  return f;
}

namespace {

void maximal_cliques_of(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                        std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const auto pivot = lowest(p | x);
  for (auto v : members(p & ~adj[pivot])) {
    maximal_cliques_of(adj, r | singleton(v), p & adj[v], x & adj[v], out);
    p &= ~singleton(v);
    x |= singleton(v);
  }
}

}  // namespace

bool SimplicialComplex::is_flag() const {
  if (names_.empty()) return true;
  std::vector<VertexSet> cliques;
  const VertexSet everything = names_.size() == kMaxVertices ? ~VertexSet{0} : singleton(names_.size()) - 1;
  maximal_cliques_of(adjacency_, 0, everything, 0, cliques);
  return std::all_of(cliques.begin(), cliques.end(), [&](VertexSet c) { return has_simplex(c); });
}

bool SimplicialComplex::same_as_by_name(const SimplicialComplex& other) const {
  if (names_.size() != other.names_.size() || simplices_.size() != other.simplices_.size()) return false;
  std::vector<VertexId> to_other(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) {
    const auto it = std::find(other.names_.begin(), other.names_.end(), names_[v]);
    if (it == other.names_.end()) return false;
    to_other[v] = static_cast<VertexId>(it - other.names_.begin());
  }
  return std::all_of(simplices_.begin(), simplices_.end(), [&](VertexSet s) {
    VertexSet mapped = 0;
    for (auto v : members(s)) mapped |= singleton(to_other[v]);
    return other.has_simplex(mapped);
  });
}

std::string SimplicialComplex::to_dot() const {
  std::ostringstream out;
  out << "graph flag_complex {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < names_.size(); ++v) out << "  v" << v << " [label=\"" << names_[v] << "\"];\n";
  for (auto s : simplices_) {
    if (cardinality(s) != 2) continue;
    const auto m = members(s);
    out << "  v" << m[0] << " -- v" << m[1] << ";\n";
  }
  // Triangles are drawn as shaded marker nodes tied to their corners.
  std::size_t t = 0;
  for (auto s : simplices_) {
    if (cardinality(s) != 3) continue;
    out << "  t" << t << " [shape=triangle, style=filled, fillcolor=lightblue, label=\"\", width=0.25];\n";
    for (auto v : members(s)) out << "  t" << t << " -- v" << v << " [style=dotted, color=lightblue];\n";
    ++t;
  }
  out << "}\n";
  return out.str();
}

SimplicialComplex flag_complex(const DefiningGraph& g) {
  std::vector<VertexSet> simplices;
  for (const auto& c : enumerate_cliques(g)) {
    if (c.members != 0) simplices.push_back(c.members);
  }
  return SimplicialComplex(g.names(), simplices);
}

double QuarterTurns::radians() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return *count_ * std::numbers::pi / 2.0;
}

std::string QuarterTurns::to_string() const {
  if (is_infinite()) return "inf";
  const auto q = *count_;
  if (q == 0) return "0";
  if (q % 2 == 0) return (q == 2 ? std::string() : std::to_string(q / 2)) + "pi";
  return (q == 1 ? std::string() : std::to_string(q)) + "pi/2";
}

namespace {

std::vector<std::uint32_t> bfs_from(const SimplicialComplex& c, VertexSet sources) {
  constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(c.vertex_count(), unreached);
  std::deque<VertexId> queue;
  for (auto v : members(sources)) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (VertexId w = 0; w < c.vertex_count(); ++w) {
      if (dist[w] == unreached && c.adjacent(u, w)) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

QuarterTurns spherical_vertex_distance(const SimplicialComplex& c, VertexId v, VertexId w) {
  if (v >= c.vertex_count() || w >= c.vertex_count()) {
    throw PreconditionError(PreconditionKind::UnknownVertex, std::to_string(std::max(v, w)));
  }
  const auto d = bfs_from(c, singleton(v))[w];
  if (d == std::numeric_limits<std::uint32_t>::max()) return QuarterTurns::infinite();
  return QuarterTurns::of(d);
}

QuarterTurns simplex_separation_lower_bound(const SimplicialComplex& c, VertexSet first,
                                            VertexSet second) {
  for (auto s : {first, second}) {
    if (!c.has_simplex(s)) throw PreconditionError(PreconditionKind::NotAClique, "not a simplex");
  }
  const auto dist = bfs_from(c, first);
  auto best = std::numeric_limits<std::uint32_t>::max();
  for (auto v : members(second)) best = std::min(best, dist[v]);
  if (best == std::numeric_limits<std::uint32_t>::max()) return QuarterTurns::infinite();
  return QuarterTurns::of(best);
}

LinkPartition link_partition_at(const DefiningGraph& g, VertexSet clique) {
  if (clique == 0) throw PreconditionError(PreconditionKind::EmptyClique, "");
  if ((clique & ~g.all()) != 0 || !g.is_clique(clique)) {
    throw PreconditionError(PreconditionKind::NotAClique, g.format_set(clique & g.all()));
  }
  LinkPartition out{clique, {}};
  for (auto s : members(clique)) out.families.push_back({s, clique & ~singleton(s), true, true});
  for (VertexId x = 0; x < g.size(); ++x) {
    if (!contains(clique, x) && (clique & ~g.neighbors(x)) == 0) out.upward |= singleton(x);
  }
  return out;
}

}  // namespace artin
