#include <random>

#include "artin/ball.hpp"
#include "artin/cube_paths.hpp"
#include "artin/error.hpp"
#include "artin/witness.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace artin;

namespace {

const char* kTriPendant = "vertices: a b c d\nedges: a-b:3 b-c:3 a-c:3 c-d:2\n";

PathStep up(VertexId s) { return {s, Direction::Up, 0}; }
PathStep down(VertexId s, int power) { return {s, Direction::Down, power}; }

std::vector<HyperplaneType> types(std::initializer_list<VertexId> ids) {
  std::vector<HyperplaneType> out;
  for (auto i : ids) out.push_back({i});
  return out;
}

}  // namespace

TEST_CASE("validate_path and vertex_sequence") {
  const auto g = parse_graph(kTriPendant);
  const EdgePath ok{{}, {up(0), up(1), down(0, 2), down(1, -1)}};
  CHECK_NOTHROW(validate_path(g, ok));
  const auto vs = vertex_sequence(g, ok);
  REQUIRE(vs.size() == 5);
  CHECK(format_vertex(g, vs[0]) == "A_{}");
  CHECK(format_vertex(g, vs[2]) == "A_{a,b}");
  CHECK(format_vertex(g, vs[3]) == "a^2 A_{b}");
  CHECK(format_vertex(g, vs[4]) == "a^2 b^-1 A_{}");

  CHECK_THROWS_AS(validate_path(g, EdgePath{{}, {down(0, 1)}}), PreconditionError);
  CHECK_THROWS_AS(validate_path(g, EdgePath{{}, {up(0), up(0)}}), PreconditionError);
  CHECK_THROWS_AS(validate_path(g, EdgePath{{}, {up(0), up(3)}}), PreconditionError);  // {a,d} not a clique
  CHECK_THROWS_AS(validate_path(g, EdgePath{{}, {up(9)}}), PreconditionError);
  CHECK_THROWS_AS(certify_geodesic(g, EdgePath{{}, {down(0, 1)}}), PreconditionError);
}

TEST_CASE("certify: repeated label through a coset") {
  const auto g = parse_graph("vertices: s");
  // up s then down s^1: A_{} -> A_{s} -> s A_{}; the two s-edges never share a cube
  auto cert = certify_geodesic(g, EdgePath{{}, {up(0), down(0, 1)}});
  CHECK(cert.certified());
  REQUIRE(cert.corners.size() == 1);
  CHECK(cert.corners[0].kind == CornerKind::SameLabel);

  // down then up along one label retraces the same edge
  const EdgePath back{{Word{}, 1}, {down(0, 0), up(0)}};
  cert = certify_geodesic(g, back);
  CHECK_FALSE(cert.certified());
  CHECK(cert.corners[0].kind == CornerKind::Backtrack);

  // up then down with power 0 retraces too
  cert = certify_geodesic(g, EdgePath{{}, {up(0), down(0, 0)}});
  CHECK_FALSE(cert.certified());
  CHECK(cert.corners[0].kind == CornerKind::Backtrack);
}

TEST_CASE("certify: distinct labels") {
  const auto g = parse_graph(kTriPendant);
  const auto a = g.index_of("a");
  const auto b = g.index_of("b");
  const auto d = g.index_of("d");
  // (a up, a down, d up): corner at a A_{} joins labels a and d, non-adjacent
  auto cert = certify_geodesic(g, EdgePath{{}, {up(a), down(a, 1), up(d)}});
  CHECK(cert.certified());
  CHECK(cert.corners[1].kind == CornerKind::NonAdjacentLabels);

  // down d then up a: corner at d A_{} with non-adjacent labels
  cert = certify_geodesic(g, EdgePath{{{}, singleton(d)}, {down(d, 1), up(a)}});
  CHECK(cert.certified());
  CHECK(cert.corners[0].kind == CornerKind::NonAdjacentLabels);

  // a up, b up: the two edges span the square [A_{}, A_{a,b}]
  cert = certify_geodesic(g, EdgePath{{}, {up(a), up(b)}});
  CHECK_FALSE(cert.certified());
  CHECK(cert.corners[0].kind == CornerKind::AdjacentLabels);
  CHECK_FALSE(cert.corners[0].passes);

  // short paths have no interior corners
  CHECK(certify_geodesic(g, EdgePath{{}, {up(a)}}).certified());
  CHECK(certify_geodesic(g, EdgePath{}).corners.empty());
}

TEST_CASE("hyperplane sequences") {
  const auto g = parse_graph(kTriPendant);
  const auto axis = axis_path({{0, 1}, {3, 1}, {1, 1}});
  CHECK(hyperplane_sequence(axis) == types({0, 0, 3, 3, 1, 1}));
  CHECK(hyperplane_sequence(EdgePath{{}, {up(2)}}) == types({2}));
  CHECK(hyperplane_sequence(EdgePath{}).empty());
}

TEST_CASE("may_cross") {
  const auto g = parse_graph(kTriPendant);
  CHECK_FALSE(may_cross(g, {0}, {0}));
  CHECK_FALSE(may_cross(g, {0}, {3}));
  CHECK(may_cross(g, {0}, {1}));
  for (VertexId s = 0; s < 4; ++s)
    for (VertexId t = 0; t < 4; ++t) CHECK(may_cross(g, {s}, {t}) == may_cross(g, {t}, {s}));
}

TEST_CASE("noncrossing checks") {
  const auto g = parse_graph(kTriPendant);
  CHECK(pairwise_noncrossing(g, types({0, 0, 3, 3})));
  CHECK_FALSE(pairwise_noncrossing(g, types({0, 0, 1, 1})));
  CHECK(pairwise_noncrossing(g, {}));

  // consecutive passes where pairwise fails: a d b has a,b adjacent at distance 2
  CHECK(consecutive_noncrossing(g, types({0, 3, 1})));
  CHECK_FALSE(pairwise_noncrossing(g, types({0, 3, 1})));
  CHECK_FALSE(consecutive_noncrossing(g, types({3, 1, 0}), true));
  CHECK(consecutive_noncrossing(g, types({0, 3, 0, 3}), true));
}

TEST_CASE("pairwise noncrossing is inherited by every contiguous piece") {
  std::mt19937 rng(17);
  const auto g = parse_graph("vertices: a b c d e\nedges: a-b:2 b-c:2 c-d:2 d-e:2");
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<HyperplaneType> seq(1 + rng() % 8);
    for (auto& t : seq) t.label = rng() % 5;
    if (!pairwise_noncrossing(g, seq)) continue;
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i; j <= seq.size(); ++j)
        CHECK(pairwise_noncrossing(g, {seq.begin() + static_cast<long>(i), seq.begin() + static_cast<long>(j)}));
  }
}

TEST_CASE("covers_all_types") {
  const auto g = parse_graph(kTriPendant);
  CHECK(covers_all_types(g, types({0, 1, 2, 3, 0})));
  CHECK_FALSE(covers_all_types(g, types({0, 1})));
  CHECK(covers_all_types(parse_graph("vertices: s"), types({0})));
}

TEST_CASE("path JSON round trip") {
  const auto g = parse_graph(kTriPendant);
  const EdgePath p{{}, {up(0), up(1), down(0, -3), down(1, 1)}};
  const auto j = path_to_json(g, p);
  CHECK(j.is_array());
  CHECK(j[0]["label"] == "a");
  CHECK(j[0]["dir"] == "up");
  CHECK(j[2]["power"] == -3);
  CHECK(path_from_json(g, nlohmann::json::parse(j.dump())) == p);

  const EdgePath based{{parse_word(g, "a d^-1"), singleton(2)}, {down(2, 1)}};
  const auto jb = path_to_json(g, based);
  CHECK(jb.is_object());
  CHECK(path_from_json(g, nlohmann::json::parse(jb.dump())) == based);

  // down without a power keeps the representative
  const auto parsed = path_from_json(g, nlohmann::json::parse(R"([{"label":"a","dir":"up"},{"label":"a","dir":"down"}])"));
  CHECK(parsed.steps[1].power == 0);
}

TEST_CASE("realized squares only join labels that may cross") {
  // In a right-angled ball every square's two edge directions are adjacent generators.
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto g = oracle::graph_from_mask(4, mask);
    const auto ball = build_ball(g, 4);
    if (ball.cubes.size() < 2) continue;
    for (const auto& sq : ball.cubes[1]) {
      const auto dirs = members(sq.directions);
      REQUIRE(dirs.size() == 2);
      CHECK(may_cross(g, {dirs[0]}, {dirs[1]}));
    }
  }
}
