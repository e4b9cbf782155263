#include "artin/coxeter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace artin {

std::string CoxeterType::tag() const {
  switch (family) {
    case CoxeterFamily::A: return "A" + std::to_string(rank);
    case CoxeterFamily::B: return "B" + std::to_string(rank);
    case CoxeterFamily::D: return "D" + std::to_string(rank);
    case CoxeterFamily::E: return "E" + std::to_string(rank);
    case CoxeterFamily::F: return "F" + std::to_string(rank);
    case CoxeterFamily::H: return "H" + std::to_string(rank);
    case CoxeterFamily::I: return "I2(" + std::to_string(dihedral_order) + ")";
    case CoxeterFamily::Infinite: return "INFINITE";
  }
  return "INFINITE";
}

namespace {

void require_clique(const DefiningGraph& g, VertexSet clique) {
  if ((clique & ~g.all()) != 0 || !g.is_clique(clique)) {
    throw PreconditionError(PreconditionKind::NotAClique, g.format_set(clique & g.all()));
  }
}

constexpr CoxeterType infinite() { return {CoxeterFamily::Infinite, 0, 0}; }

class Diagram {
 public:
  Diagram(std::size_t n, std::span<const int> labels) : n_(n), labels_(labels) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && labels[i * n + j] >= 3) adj_[i] |= singleton(j);
      }
    }
  }

  int label(VertexId i, VertexId j) const { return labels_[i * n_ + j]; }
  VertexSet adj(VertexId i) const { return adj_[i]; }

  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    VertexSet unseen = n_ == 0 ? 0 : (n_ == kMaxVertices ? ~VertexSet{0} : singleton(n_) - 1);
    while (unseen != 0) {
      VertexSet comp = singleton(lowest(unseen));
      VertexSet frontier = comp;
      while (frontier != 0) {
        VertexSet next = 0;
        for (auto v : members(frontier)) next |= adj_[v];
        frontier = next & ~comp;
        comp |= next;
      }
      out.push_back(comp);
      unseen &= ~comp;
    }
    return out;
  }

  // Number of vertices on the arm leaving `center` through `first`; the
  // component is known to be a tree with a single branch point.
  std::size_t arm_length(VertexId center, VertexId first) const {
    std::size_t len = 1;
    VertexId prev = center;
    VertexId cur = first;
    for (;;) {
      const VertexSet onward = adj_[cur] & ~singleton(prev);
      if (onward == 0) return len;
      prev = cur;
      cur = lowest(onward);
      ++len;
    }
  }

  CoxeterType classify(VertexSet comp) const {
    const auto size = cardinality(comp);
    if (size == 1) return {CoxeterFamily::A, 1, 0};

    std::size_t degree_sum = 0;
    std::vector<VertexId> branch;
    std::vector<VertexId> ends;
    for (auto v : members(comp)) {
      const auto d = cardinality(adj_[v]);
      degree_sum += d;
      if (d >= 4) return infinite();
      if (d == 3) branch.push_back(v);
      if (d == 1) ends.push_back(v);
    }
    if (degree_sum / 2 != size - 1) return infinite();  // contains a cycle
    if (branch.size() > 1) return infinite();

    if (branch.size() == 1) {
      const auto center = branch.front();
      std::array<std::size_t, 3> arms{};
      std::size_t k = 0;
      for (auto v : members(comp)) {
        for (auto w : members(adj_[v])) {
          if (w > v && label(v, w) != 3) return infinite();
        }
      }
      for (auto nb : members(adj_[center])) arms[k++] = arm_length(center, nb);
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) return {CoxeterFamily::D, size, 0};
      if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        return {CoxeterFamily::E, size, 0};
      }
      return infinite();
    }

    // A path: read its labels from the lower-numbered end.
    std::vector<int> path_labels;
    {
      VertexId prev = ends.front();
      VertexId cur = ends.front();
      VertexSet visited = singleton(cur);
      for (;;) {
        const VertexSet onward = adj_[cur] & ~visited;
        if (onward == 0) break;
        prev = cur;
        cur = lowest(onward);
        visited |= singleton(cur);
        path_labels.push_back(label(prev, cur));
      }
    }
    if (size == 2) {
      const int m = path_labels.front();
      if (m == 3) return {CoxeterFamily::A, 2, 0};
      if (m == 4) return {CoxeterFamily::B, 2, 0};
      return {CoxeterFamily::I, 2, m};
    }

    std::size_t heavy = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < path_labels.size(); ++i) {
      if (path_labels[i] > 3) {
        ++heavy;
        where = i;
      }
    }
    if (heavy == 0) return {CoxeterFamily::A, size, 0};
    if (heavy > 1) return infinite();
    const int m = path_labels[where];
    const bool at_end = where == 0 || where + 1 == path_labels.size();
    if (m == 4 && at_end) return {CoxeterFamily::B, size, 0};
    if (m == 4 && size == 4 && where == 1) return {CoxeterFamily::F, 4, 0};
    if (m == 5 && at_end && (size == 3 || size == 4)) return {CoxeterFamily::H, size, 0};
    return infinite();
  }

 private:
  std::size_t n_;
  std::span<const int> labels_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

std::vector<int> dense_labels(const DefiningGraph& g, const std::vector<VertexId>& verts) {
  const auto n = verts.size();
  std::vector<int> labels(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) labels[i * n + j] = g.label(verts[i], verts[j]).value_or(0);
    }
  }
  return labels;
}

}  // namespace

CoxeterDiagram coxeter_diagram(const DefiningGraph& g, VertexSet clique) {
  require_clique(g, clique);
  CoxeterDiagram out{clique, {}};
  for (const auto& e : g.edges()) {
    if (contains(clique, e.a) && contains(clique, e.b) && e.label >= 3) out.edges.push_back(e);
  }
  return out;
}

CosineMatrix cosine_matrix(const DefiningGraph& g, VertexSet clique) {
  require_clique(g, clique);
  const auto verts = members(clique);
  const auto n = verts.size();
  CosineMatrix out{n, std::vector<double>(n * n, 1.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = *g.label(verts[i], verts[j]);
      // cos(pi/2) is not exactly 0 in floating point; commuting pairs are.
      out.entries[i * n + j] = m == 2 ? 0.0 : -std::cos(std::numbers::pi / m);
    }
  }
  return out;
}

FinitenessVerdict classify_labels(std::size_t n, std::span<const int> labels) {
  const Diagram diagram(n, labels);
  FinitenessVerdict out;
  for (auto comp : diagram.components()) {
    auto type = diagram.classify(comp);
    if (type.family == CoxeterFamily::Infinite) out.finite = false;
    out.components.push_back({comp, type});
  }
  return out;
}

FinitenessVerdict is_finite_type(const DefiningGraph& g, VertexSet clique) {
  require_clique(g, clique);
  const auto verts = members(clique);
  const auto labels = dense_labels(g, verts);
  auto verdict = classify_labels(verts.size(), labels);
  for (auto& comp : verdict.components) {
    VertexSet global = 0;
    for (auto local : members(comp.vertices)) global |= singleton(verts[local]);
    comp.vertices = global;
  }
  return verdict;
}

FcTypeResult is_fc_type(const DefiningGraph& g) {
  FcTypeResult out;
  const auto maximal = maximal_cliques(g);
  out.fc = std::all_of(maximal.begin(), maximal.end(),
                       [&](VertexSet c) { return is_finite_type(g, c).finite; });
  if (out.fc) return out;
  for (const auto& clique : enumerate_cliques(g)) {
    if (cardinality(clique.members) >= 3 && !is_finite_type(g, clique.members).finite) {
      out.offending_cliques.push_back(clique.members);
    }
  }
  return out;
}

}  // namespace artin
