#include "artin/ball.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

#include "artin/coxeter.hpp"

namespace artin {

namespace {

void require_right_angled(const DefiningGraph& g) {
  if (!g.right_angled()) {
    throw PreconditionError(PreconditionKind::NotRightAngled,
                            "exact coset arithmetic needs every edge label to be 2");
  }
}

// Distinct generators joined by an edge commute; a generator never commutes
// with itself here (equal letters keep their relative order).
bool independent(const DefiningGraph& g, Letter a, Letter b) {
  return a.gen != b.gen && g.adjacent(a.gen, b.gen);
}

// Cancel x ... x^-1 whenever every letter in between commutes with x.
void cancel_commuting_pairs(const DefiningGraph& g, Word& w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j] == w[i].inverted()) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (w[j] != w[i] && !independent(g, w[i], w[j])) break;
      }
    }
  }
}

// Lexicographically least member of the commutation class of a reduced word.
Word least_shuffle(const DefiningGraph& g, Word rest) {
  Word out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < rest.size(); ++p) {
      if (!(rest[p] < rest[best])) continue;
      bool movable = true;
      for (std::size_t q = 0; q < p && movable; ++q) movable = independent(g, rest[q], rest[p]);
      if (movable) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Word normal_form_unchecked(const DefiningGraph& g, Word w) {
  cancel_commuting_pairs(g, w);
  return least_shuffle(g, std::move(w));
}

CosetVertex canonical_coset_unchecked(const DefiningGraph& g, const Word& w, VertexSet clique) {
  Word rep = normal_form_unchecked(g, w);
  for (;;) {
    // The last letter of each generator decides whether that generator can
    // reach the right end; check from the right.
    bool stripped = false;
    for (std::size_t p = rep.size(); p-- > 0;) {
      if (!contains(clique, rep[p].gen)) continue;
      bool reaches_end = true;
      for (std::size_t q = p + 1; q < rep.size() && reaches_end; ++q) {
        reaches_end = independent(g, rep[p], rep[q]);
      }
      if (reaches_end) {
        rep.erase(rep.begin() + static_cast<std::ptrdiff_t>(p));
        stripped = true;
        break;
      }
    }
    if (!stripped) break;
    rep = least_shuffle(g, std::move(rep));
  }
  return {std::move(rep), clique};
}

bool vertex_less(const CosetVertex& a, const CosetVertex& b) {
  if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
  if (a.rep != b.rep) return a.rep < b.rep;
  return canonical_less(a.clique, b.clique);
}

// Neighbours of v whose representatives fit the word budget.
std::vector<CosetVertex> neighbours(const DefiningGraph& g, const CosetVertex& v, std::size_t budget) {
  std::vector<CosetVertex> out;
  for (VertexId s = 0; s < g.size(); ++s) {
    if (contains(v.clique, s)) {
      const VertexSet lower = v.clique & ~singleton(s);
      const auto room = static_cast<long>(budget) - static_cast<long>(v.rep.size());
      for (long n = -room; n <= room; ++n) {
        auto next = canonical_coset_unchecked(g, concat(v.rep, power(s, static_cast<int>(n))), lower);
        if (next.rep.size() <= budget) out.push_back(std::move(next));
      }
    } else if ((v.clique & ~g.neighbors(s)) == 0) {
      out.push_back(canonical_coset_unchecked(g, v.rep, v.clique | singleton(s)));
    }
  }
  return out;
}

std::size_t checked_radius(const DefiningGraph& g, long radius) {
  require_right_angled(g);
  if (radius < 0) throw PreconditionError(PreconditionKind::NegativeRadius, std::to_string(radius));
  return static_cast<std::size_t>(radius);
}

void fill_cubes(const DefiningGraph& g, CubeBall& ball, bool parallel) {
  std::vector<VertexSet> cliques;
  for (const auto& c : enumerate_cliques(g)) cliques.push_back(c.members);
  const auto max_dim = cardinality(cliques.back());
  ball.cubes.assign(max_dim, {});

  const auto n = static_cast<long>(ball.vertices.size());
  std::vector<std::vector<Cube>> found(ball.vertices.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long i = 0; i < n; ++i) {
    const auto& v = ball.vertices[static_cast<std::size_t>(i)];
    for (auto top : cliques) {
      if ((top & v.clique) != v.clique || top == v.clique) continue;
      const VertexSet dirs = top & ~v.clique;
      const auto bits = members(dirs);
      Cube cube{static_cast<std::size_t>(i), 0, dirs, {}};
      cube.corners.reserve(std::size_t{1} << bits.size());
      bool inside = true;
      for (std::size_t m = 0; m < (std::size_t{1} << bits.size()) && inside; ++m) {
        VertexSet r = v.clique;
        for (std::size_t k = 0; k < bits.size(); ++k) {
          if ((m >> k) & 1U) r |= singleton(bits[k]);
        }
        const auto corner = ball.find(canonical_coset_unchecked(g, v.rep, r));
        if (!corner) inside = false;
        else cube.corners.push_back(*corner);
      }
      if (!inside) continue;
      cube.top = cube.corners.back();
      found[static_cast<std::size_t>(i)].push_back(std::move(cube));
    }
  }
  for (auto& list : found) {
    for (auto& cube : list) ball.cubes[cube.dimension() - 1].push_back(std::move(cube));
  }
}

CubeBall finish(const DefiningGraph& g, std::vector<std::pair<std::size_t, CosetVertex>> placed,
                std::size_t radius, std::size_t budget, bool parallel) {
  std::sort(placed.begin(), placed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return vertex_less(a.second, b.second);
  });
  CubeBall ball;
  ball.radius = radius;
  ball.word_budget = budget;
  for (auto& [d, v] : placed) {
    ball.distance.push_back(d);
    ball.vertices.push_back(std::move(v));
  }
  ball.reindex();
  fill_cubes(g, ball, parallel);
  mark_deligne(g, ball);
  return ball;
}

}  // namespace

Word normal_form_raag(const DefiningGraph& g, const Word& w) {
  require_right_angled(g);
  for (const auto& letter : w) {
    if (letter.gen >= g.size()) throw PreconditionError(PreconditionKind::UnknownVertex, std::to_string(letter.gen));
  }
  return normal_form_unchecked(g, w);
}

std::size_t CosetVertexHash::operator()(const CosetVertex& v) const noexcept {
  std::size_t h = std::hash<VertexSet>{}(v.clique);
  for (const auto& letter : v.rep) {
    h ^= (letter.gen * 2 + (letter.inverse ? 1 : 0) + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
  }
  return h;
}

CosetVertex canonical_coset(const DefiningGraph& g, const Word& w, VertexSet clique) {
  require_right_angled(g);
  if ((clique & ~g.all()) != 0 || !g.is_clique(clique)) {
    throw PreconditionError(PreconditionKind::NotAClique, g.format_set(clique & g.all()));
  }
  for (const auto& letter : w) {
    if (letter.gen >= g.size()) throw PreconditionError(PreconditionKind::UnknownVertex, std::to_string(letter.gen));
  }
  return canonical_coset_unchecked(g, w, clique);
}

std::optional<std::size_t> CubeBall::find(const CosetVertex& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CubeBall::cube_count(std::size_t dimension) const {
  if (dimension == 0) return vertices.size();
  return dimension <= cubes.size() ? cubes[dimension - 1].size() : 0;
}

void CubeBall::reindex() {
  index_.clear();
  index_.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) index_.emplace(vertices[i], i);
}

std::size_t default_word_budget(std::size_t radius) { return radius / 2; }

CubeBall build_ball_serial(const DefiningGraph& g, long radius_in, std::optional<std::size_t> word_budget) {
  const auto radius = checked_radius(g, radius_in);
  const auto budget = word_budget.value_or(default_word_budget(radius));

  std::unordered_map<CosetVertex, std::size_t, CosetVertexHash> dist;
  std::deque<CosetVertex> queue;
  const CosetVertex start{{}, 0};
  dist.emplace(start, 0);
  queue.push_back(start);
  while (!queue.empty()) {
    const auto v = std::move(queue.front());
    queue.pop_front();
    const auto d = dist.at(v);
    if (d == radius) continue;
    for (auto& nb : neighbours(g, v, budget)) {
      if (dist.contains(nb)) continue;
      dist.emplace(nb, d + 1);
      queue.push_back(std::move(nb));
    }
  }
  std::vector<std::pair<std::size_t, CosetVertex>> placed;
  placed.reserve(dist.size());
  for (auto& [v, d] : dist) placed.emplace_back(d, v);
  return finish(g, std::move(placed), radius, budget, /*parallel=*/false);
}

CubeBall build_ball(const DefiningGraph& g, long radius_in, std::optional<std::size_t> word_budget) {
  const auto radius = checked_radius(g, radius_in);
  const auto budget = word_budget.value_or(default_word_budget(radius));

  std::unordered_set<CosetVertex, CosetVertexHash> seen;
  std::vector<std::pair<std::size_t, CosetVertex>> placed;
  std::vector<CosetVertex> frontier{CosetVertex{{}, 0}};
  seen.insert(frontier.front());
  placed.emplace_back(0, frontier.front());

  for (std::size_t d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<std::vector<CosetVertex>> produced(frontier.size());
    const auto width = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < width; ++i) {
      produced[static_cast<std::size_t>(i)] = neighbours(g, frontier[static_cast<std::size_t>(i)], budget);
    }
    std::vector<CosetVertex> next;
    for (auto& list : produced) {
      for (auto& nb : list) {
        if (seen.insert(nb).second) next.push_back(std::move(nb));
      }
    }
    std::sort(next.begin(), next.end(), vertex_less);
    for (const auto& v : next) placed.emplace_back(d + 1, v);
    frontier = std::move(next);
  }
  return finish(g, std::move(placed), radius, budget, /*parallel=*/true);
}

LinkIsomorphism verify_link_base(const DefiningGraph& g, const CubeBall& ball) {
  LinkIsomorphism out;
  const auto base = ball.find(CosetVertex{{}, 0});
  if (!base) {
    out.detail = "ball does not contain A_emptyset";
    return out;
  }
  std::vector<VertexSet> simplices;
  VertexSet seen_labels = 0;
  for (const auto& layer : ball.cubes) {
    for (const auto& cube : layer) {
      if (cube.bottom != *base) continue;
      simplices.push_back(cube.directions);
      if (cube.dimension() == 1) seen_labels |= cube.directions;
    }
  }
  out.link = SimplicialComplex(g.names(), simplices);
  const auto expected = flag_complex(g);
  if (seen_labels != g.all()) {
    out.detail = "generators without an edge at A_emptyset: " + g.format_set(g.all() & ~seen_labels);
    return out;
  }
  out.isomorphic = out.link.same_as_by_name(expected);
  if (!out.isomorphic) {
    const auto got = out.link.f_vector();
    const auto want = expected.f_vector();
    std::ostringstream msg;
    msg << "f-vectors differ or simplices mismatch (link has " << out.link.simplices().size()
        << " simplices, flag complex has " << expected.simplices().size() << ")";
    if (got.size() < want.size()) msg << "; ball radius too small for the largest clique";
    out.detail = msg.str();
  }
  return out;
}

SimplicialComplex vertex_link(const DefiningGraph& g, const CubeBall& ball, std::size_t vertex) {
  std::vector<std::size_t> link_vertices;
  std::vector<std::vector<std::size_t>> raw;
  auto slot = [&](std::size_t nb) {
    const auto it = std::find(link_vertices.begin(), link_vertices.end(), nb);
    if (it != link_vertices.end()) return static_cast<std::size_t>(it - link_vertices.begin());
    link_vertices.push_back(nb);
    return link_vertices.size() - 1;
  };
  for (const auto& layer : ball.cubes) {
    for (const auto& cube : layer) {
      const auto at = std::find(cube.corners.begin(), cube.corners.end(), vertex);
      if (at == cube.corners.end()) continue;
      const auto m = static_cast<std::size_t>(at - cube.corners.begin());
      std::vector<std::size_t> simplex;
      for (std::size_t k = 0; k < cube.dimension(); ++k) simplex.push_back(slot(cube.corners[m ^ (std::size_t{1} << k)]));
      raw.push_back(std::move(simplex));
    }
  }
  if (link_vertices.size() > kMaxVertices) throw std::invalid_argument("link has more than 64 vertices");
  std::vector<std::string> names;
  for (auto nb : link_vertices) names.push_back(format_vertex(g, {ball.vertices[nb].rep, ball.vertices[nb].clique}));
  std::vector<VertexSet> simplices;
  for (const auto& s : raw) {
    VertexSet mask = 0;
    for (auto id : s) mask |= singleton(id);
    simplices.push_back(mask);
  }
  return SimplicialComplex(std::move(names), simplices);
}

bool deligne_flag(const DefiningGraph& g, VertexSet clique) { return is_finite_type(g, clique).finite; }

CubeBall& mark_deligne(const DefiningGraph& g, CubeBall& ball) {
  ball.deligne.assign(ball.vertices.size(), false);
  std::unordered_map<VertexSet, bool> cache;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const auto clique = ball.vertices[i].clique;
    auto it = cache.find(clique);
    if (it == cache.end()) it = cache.emplace(clique, deligne_flag(g, clique)).first;
    ball.deligne[i] = it->second;
  }
  return ball;
}

nlohmann::ordered_json ball_to_json(const DefiningGraph& g, const CubeBall& ball) {
  using nlohmann::ordered_json;
  auto names_of = [&](VertexSet set) {
    auto arr = ordered_json::array();
    for (auto v : members(set)) arr.push_back(g.name(v));
    return arr;
  };
  ordered_json doc;
  doc["schema"] = "artin-cube/ball/1";
  doc["radius"] = ball.radius;
  doc["word_budget"] = ball.word_budget;
  auto verts = ordered_json::array();
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    verts.push_back({{"rep", format_word(g, ball.vertices[i].rep)},
                     {"clique", names_of(ball.vertices[i].clique)},
                     {"distance", ball.distance[i]},
                     {"deligne", static_cast<bool>(ball.deligne[i])}});
  }
  doc["vertices"] = std::move(verts);
  auto cubes = ordered_json::array();
  for (const auto& layer : ball.cubes) {
    for (const auto& cube : layer) {
      cubes.push_back({{"dimension", cube.dimension()},
                       {"bottom", cube.bottom},
                       {"top", cube.top},
                       {"directions", names_of(cube.directions)}});
    }
  }
  doc["cubes"] = std::move(cubes);
  return doc;
}

std::string ball_to_dot(const DefiningGraph& g, const CubeBall& ball) {
  std::ostringstream out;
  out << "graph ball {\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    out << "  n" << i << " [label=\"" << format_vertex(g, {ball.vertices[i].rep, ball.vertices[i].clique})
        << "\"" << (ball.deligne[i] ? "" : ", style=dashed") << "];\n";
  }
  if (!ball.cubes.empty()) {
    for (const auto& edge : ball.cubes[0]) {
      out << "  n" << edge.bottom << " -- n" << edge.top << " [label=\"" << g.name(lowest(edge.directions))
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace artin
