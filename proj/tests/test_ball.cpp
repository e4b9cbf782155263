#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "artin/ball.hpp"
#include "artin/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace artin;

namespace {

std::set<std::string> vertex_names(const DefiningGraph& g, const CubeBall& ball) {
  std::set<std::string> out;
  for (const auto& v : ball.vertices) out.insert(format_vertex(g, {v.rep, v.clique}));
  return out;
}

bool same_ball(const CubeBall& a, const CubeBall& b) {
  if (a.vertices != b.vertices || a.distance != b.distance || a.deligne != b.deligne) return false;
  if (a.cubes.size() != b.cubes.size()) return false;
  for (std::size_t d = 0; d < a.cubes.size(); ++d) {
    if (a.cubes[d].size() != b.cubes[d].size()) return false;
    for (std::size_t i = 0; i < a.cubes[d].size(); ++i) {
      const auto& x = a.cubes[d][i];
      const auto& y = b.cubes[d][i];
      if (x.bottom != y.bottom || x.top != y.top || x.directions != y.directions || x.corners != y.corners)
        return false;
    }
  }
  return true;
}

std::size_t max_clique_size(const DefiningGraph& g) {
  std::size_t best = 0;
  for (auto c : maximal_cliques(g)) best = std::max(best, cardinality(c));
  return best;
}

}  // namespace

TEST_CASE("normal form examples") {
  const auto g = parse_graph("vertices: s t u\nedges: s-t:2");
  CHECK(normal_form_raag(g, parse_word(g, "s s^-1")).empty());
  CHECK(format_word(g, normal_form_raag(g, parse_word(g, "t s"))) == "s t");
  CHECK(format_word(g, normal_form_raag(g, parse_word(g, "u s"))) == "u s");
  CHECK(format_word(g, normal_form_raag(g, parse_word(g, "s t s^-1"))) == "t");
  CHECK(format_word(g, normal_form_raag(g, parse_word(g, "s u s^-1"))) == "s u s^-1");
  CHECK_THROWS_AS(normal_form_raag(parse_graph("vertices: a b\nedges: a-b:3"), {}), PreconditionError);
}

TEST_CASE("normal form is the least geodesic of its element (words up to length 4)") {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const auto g = oracle::graph_from_mask(3, mask);
    const oracle::WordClasses classes(g, 4);
    std::map<std::size_t, Word> by_class;
    for (const auto& w : classes.words()) {
      const auto nf = normal_form_raag(g, w);
      REQUIRE(classes.known(nf));
      CHECK(classes.same(nf, w));
      const auto geo = classes.geodesics(w);
      CHECK(nf == geo.front());
      const auto [it, fresh] = by_class.emplace(classes.class_of(w), nf);
      if (!fresh) CHECK(it->second == nf);
    }
  }
}

TEST_CASE("canonical coset examples") {
  const auto apart = parse_graph("vertices: s t");
  auto v = canonical_coset(apart, parse_word(apart, "s"), parse_vertex_list(apart, "s"));
  CHECK(v.rep.empty());
  v = canonical_coset(apart, parse_word(apart, "s t"), parse_vertex_list(apart, "t"));
  CHECK(format_word(apart, v.rep) == "s");
  v = canonical_coset(apart, parse_word(apart, "t s"), parse_vertex_list(apart, "t"));
  CHECK(format_word(apart, v.rep) == "t s");

  const auto joined = parse_graph("vertices: s t\nedges: s-t:2");
  v = canonical_coset(joined, parse_word(joined, "t s"), parse_vertex_list(joined, "t"));
  CHECK(format_word(joined, v.rep) == "s");
  CHECK(v.clique == parse_vertex_list(joined, "t"));

  CHECK_THROWS_AS(canonical_coset(parse_graph("vertices: s t"), {}, 3), PreconditionError);
}

TEST_CASE("canonical coset agrees with brute-force coset equality") {
  // words up to length 2, a in A_T up to length 4: max_len 6 makes the search complete
  for (std::uint64_t mask : {0ULL, 1ULL, 3ULL, 7ULL}) {
    const auto g = oracle::graph_from_mask(3, mask);
    const oracle::WordClasses classes(g, 6);
    std::vector<Word> short_words;
    for (const auto& w : classes.words())
      if (w.size() <= 2) short_words.push_back(w);
    for (const auto& c : enumerate_cliques(g)) {
      for (std::size_t i = 0; i < short_words.size(); ++i) {
        const auto ci = canonical_coset(g, short_words[i], c.members);
        const auto coset = oracle::coset_classes(classes, short_words[i], c.members);
        for (std::size_t j = 0; j < short_words.size(); ++j) {
          const auto cj = canonical_coset(g, short_words[j], c.members);
          CHECK((ci == cj) == (coset.count(classes.class_of(short_words[j])) != 0));
        }
      }
    }
  }
}

TEST_CASE("ball examples") {
  const auto one = parse_graph("vertices: s");
  auto ball = build_ball(one, 2);
  CHECK(vertex_names(one, ball) == std::set<std::string>{"A_{}", "A_{s}", "s A_{}", "s^-1 A_{}"});
  CHECK(ball.edge_count() == 3);
  CHECK(ball.cube_count(2) == 0);

  const auto edge = parse_graph("vertices: s t\nedges: s-t:2");
  ball = build_ball(edge, 1);
  CHECK(vertex_names(edge, ball) == std::set<std::string>{"A_{}", "A_{s}", "A_{t}"});
  ball = build_ball(edge, 2);
  CHECK(vertex_names(edge, ball) == std::set<std::string>{"A_{}", "A_{s}", "A_{t}", "A_{s,t}", "s A_{}",
                                                            "s^-1 A_{}", "t A_{}", "t^-1 A_{}"});
  REQUIRE(ball.cube_count(2) == 1);
  CHECK(ball.vertices[ball.cubes[1][0].bottom] == CosetVertex{{}, 0});
  CHECK(ball.vertices[ball.cubes[1][0].top] == CosetVertex{{}, 3});

  for (const char* text : {"vertices: s", "vertices: a b c\nedges: a-b:2"}) {
    const auto g = parse_graph(text);
    ball = build_ball(g, 0);
    CHECK(ball.vertices.size() == 1);
    CHECK(ball.edge_count() == 0);
  }

  CHECK_THROWS_AS(build_ball(one, -1), PreconditionError);
  CHECK_THROWS_AS(build_ball(parse_graph("vertices: s t\nedges: s-t:3"), 2), PreconditionError);
}

TEST_CASE("cube structure invariants") {
  const auto g = parse_graph("vertices: a b c d\nedges: a-b:2 b-c:2 a-c:2 c-d:2");
  const auto ball = build_ball(g, 5);
  for (std::size_t d = 1; d <= ball.cubes.size(); ++d) {
    std::set<std::pair<std::size_t, VertexSet>> seen;
    for (const auto& cube : ball.cubes[d - 1]) {
      CHECK(cube.dimension() == d);
      CHECK(cube.corners.size() == (std::size_t{1} << d));
      CHECK(seen.insert({cube.bottom, cube.directions}).second);
      const auto& bottom = ball.vertices[cube.bottom];
      const auto dirs = members(cube.directions);
      for (std::size_t m = 0; m < cube.corners.size(); ++m) {
        VertexSet r = bottom.clique;
        for (std::size_t k = 0; k < dirs.size(); ++k)
          if ((m >> k) & 1U) r |= singleton(dirs[k]);
        CHECK(ball.vertices[cube.corners[m]].clique == r);
        CHECK(ball.vertices[cube.corners[m]] == canonical_coset(g, bottom.rep, r));
      }
      if (d == 2) {
        // opposite edges of a square carry the same label
        CHECK((ball.vertices[cube.corners[1]].clique ^ bottom.clique) != 0);
        CHECK((ball.vertices[cube.corners[3]].clique ^ ball.vertices[cube.corners[2]].clique) ==
              (ball.vertices[cube.corners[1]].clique ^ bottom.clique));
        CHECK((ball.vertices[cube.corners[3]].clique ^ ball.vertices[cube.corners[1]].clique) ==
              (ball.vertices[cube.corners[2]].clique ^ bottom.clique));
      }
    }
  }
  for (const auto& e : ball.cubes[0]) {
    CHECK(cardinality(ball.vertices[e.top].clique) == cardinality(ball.vertices[e.bottom].clique) + 1);
  }
}

TEST_CASE("parallel and serial builders agree") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto g = oracle::graph_from_mask(4, mask);
    for (long r : {0L, 1L, 3L, 5L}) {
      CAPTURE(mask);
      CAPTURE(r);
      CHECK(same_ball(build_ball(g, r), build_ball_serial(g, r)));
    }
  }
}

TEST_CASE("link of the base vertex is the flag complex") {
  const auto one = verify_link_base(parse_graph("vertices: s"), build_ball(parse_graph("vertices: s"), 1));
  CHECK(one.isomorphic);
  CHECK(one.link.f_vector() == std::vector<std::size_t>{1});

  const auto c4 = parse_graph("vertices: a b c d\nedges: a-b:2 b-c:2 c-d:2 d-a:2");
  const auto r = verify_link_base(c4, build_ball(c4, 2));
  CHECK(r.isomorphic);
  CHECK(r.link.f_vector() == std::vector<std::size_t>{4, 4});

  const auto k3 = parse_graph("vertices: a b c\nedges: a-b:2 b-c:2 a-c:2");
  CHECK_FALSE(verify_link_base(k3, build_ball(k3, 2)).isomorphic);  // the 3-cube needs radius 3
  CHECK(verify_link_base(k3, build_ball(k3, 3)).isomorphic);
}

TEST_CASE("interior links are flag") {
  for (const char* text : {"vertices: a b c\nedges: a-b:2 b-c:2 a-c:2", "vertices: a b c d\nedges: a-b:2 b-c:2 c-d:2",
                           "vertices: a b c d\nedges: a-b:2 b-c:2 a-c:2 c-d:2", "vertices: a b"}) {
    const auto g = parse_graph(text);
    const std::size_t radius = 5;
    const auto ball = build_ball(g, static_cast<long>(radius));
    const auto depth = radius - max_clique_size(g);
    std::size_t checked = 0;
    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
      if (ball.distance[v] > depth) continue;
      ++checked;
      CHECK(vertex_link(g, ball, v).is_flag());
    }
    CHECK(checked > 1);
  }
}

TEST_CASE("deligne flags") {
  const auto g = parse_graph("vertices: a b c d\nedges: a-b:2 b-c:2 c-d:2");
  const auto ball = build_ball(g, 3);
  CHECK(std::all_of(ball.deligne.begin(), ball.deligne.end(), [](bool b) { return b; }));
  const auto tri = parse_graph("vertices: a b c\nedges: a-b:3 b-c:3 a-c:3");
  CHECK_FALSE(deligne_flag(tri, tri.all()));
  CHECK(deligne_flag(tri, 0));
  CHECK(deligne_flag(tri, 3));
}

TEST_CASE("relabeling generators gives an isomorphic ball") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::graph_from_mask(4, rng() % 64);
    std::vector<VertexId> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({std::min(perm[e.a], perm[e.b]), std::max(perm[e.a], perm[e.b]), 2});
    const DefiningGraph h(g.names(), edges);
    const auto bg = build_ball(g, 4);
    const auto bh = build_ball(h, 4);
    REQUIRE(bg.vertices.size() == bh.vertices.size());
    for (std::size_t d = 1; d <= std::max(bg.cubes.size(), bh.cubes.size()); ++d)
      CHECK(bg.cube_count(d) == bh.cube_count(d));
    for (std::size_t i = 0; i < bg.vertices.size(); ++i) {
      Word w;
      for (auto l : bg.vertices[i].rep) w.push_back({perm[l.gen], l.inverse});
      VertexSet t = 0;
      for (auto m : members(bg.vertices[i].clique)) t |= singleton(perm[m]);
      const auto image = bh.find(canonical_coset(h, w, t));
      REQUIRE(image.has_value());
      CHECK(bh.distance[*image] == bg.distance[i]);
    }
  }
}

TEST_CASE("json and dot output") {
  const auto g = parse_graph("vertices: s t\nedges: s-t:2");
  const auto ball = build_ball(g, 2);
  const auto j = ball_to_json(g, ball);
  CHECK(j["schema"] == "artin-cube/ball/1");
  CHECK(j["vertices"].size() == ball.vertices.size());
  CHECK(j["cubes"].size() == ball.edge_count() + ball.cube_count(2));
  CHECK(j["vertices"][0]["rep"] == "1");
  CHECK(ball_to_dot(g, ball).find("A_{s,t}") != std::string::npos);
}
