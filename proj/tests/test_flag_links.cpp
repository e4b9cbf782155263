#include "artin/error.hpp"
#include "artin/flag_links.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace artin;

namespace {
const char* kTriPendant = "vertices: a b c d\nedges: a-b:3 b-c:3 a-c:3 c-d:2\n";
}

TEST_CASE("flag complex examples") {
  const auto tri_pendant = flag_complex(parse_graph(kTriPendant));
  CHECK(tri_pendant.f_vector() == std::vector<std::size_t>{4, 4, 1});
  CHECK(tri_pendant.is_flag());

  const auto one = flag_complex(parse_graph("vertices: s"));
  CHECK(one.f_vector() == std::vector<std::size_t>{1});

  const auto c4 = flag_complex(parse_graph("vertices: a b c d\nedges: a-b:2 b-c:2 c-d:2 d-a:2"));
  CHECK(c4.f_vector() == std::vector<std::size_t>{4, 4});
}

TEST_CASE("flag complex matches cliques on all graphs up to 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const auto g = oracle::graph_from_mask(n, mask);
      const auto c = flag_complex(g);
      auto cliques = oracle::all_cliques(g);
      cliques.erase(cliques.begin());  // drop the empty clique
      CHECK(c.simplices() == cliques);
      CHECK(c.is_flag());
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
          if (a != b) CHECK(c.adjacent(a, b) == g.adjacent(a, b));
    }
  }
}

TEST_CASE("non-flag complex detected") {
  // hollow triangle
  const SimplicialComplex hollow({"x", "y", "z"}, {0b011, 0b110, 0b101});
  CHECK_FALSE(hollow.is_flag());
  const SimplicialComplex full({"x", "y", "z"}, {0b111});
  CHECK(full.is_flag());
  CHECK(full.f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK_THROWS_AS(SimplicialComplex({"x"}, {0b10}), std::invalid_argument);
}

TEST_CASE("spherical distances") {
  const auto g = parse_graph(kTriPendant);
  const auto c = flag_complex(g);
  const auto a = g.index_of("a");
  const auto b = g.index_of("b");
  const auto d = g.index_of("d");
  CHECK(spherical_vertex_distance(c, a, b) == QuarterTurns::of(1));
  CHECK(spherical_vertex_distance(c, a, b).to_string() == "pi/2");
  CHECK(spherical_vertex_distance(c, a, a) == QuarterTurns::of(0));
  CHECK(spherical_vertex_distance(c, a, d) == QuarterTurns::of(2));
  CHECK(spherical_vertex_distance(c, a, d).to_string() == "pi");
  CHECK(spherical_vertex_distance(c, a, d).radians() == doctest::Approx(3.14159265358979));
  CHECK_THROWS_AS(spherical_vertex_distance(c, a, 9), PreconditionError);

  const auto split = flag_complex(parse_graph("vertices: s t"));
  CHECK(spherical_vertex_distance(split, 0, 1).is_infinite());
  CHECK(spherical_vertex_distance(split, 0, 1).to_string() == "inf");
}

TEST_CASE("separation lower bound") {
  const auto g = parse_graph(kTriPendant);
  const auto c = flag_complex(g);
  const auto ab = parse_vertex_list(g, "a,b");
  CHECK(simplex_separation_lower_bound(c, ab, parse_vertex_list(g, "b,c")) == QuarterTurns::of(0));
  CHECK(simplex_separation_lower_bound(c, ab, parse_vertex_list(g, "d")) == QuarterTurns::of(2));
  CHECK(simplex_separation_lower_bound(c, ab, parse_vertex_list(g, "c,d")) == QuarterTurns::of(1));
  const auto split = flag_complex(parse_graph("vertices: s t"));
  CHECK(simplex_separation_lower_bound(split, 1, 2).is_infinite());
  CHECK_THROWS_AS(simplex_separation_lower_bound(c, parse_vertex_list(g, "a,d"), ab), PreconditionError);
}

TEST_CASE("distance is a metric on all graphs up to 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const auto c = flag_complex(oracle::graph_from_mask(n, mask));
      for (VertexId x = 0; x < n; ++x)
        for (VertexId y = 0; y < n; ++y) {
          const auto dxy = spherical_vertex_distance(c, x, y);
          CHECK(dxy == spherical_vertex_distance(c, y, x));
          CHECK((dxy == QuarterTurns::of(0)) == (x == y));
          for (VertexId z = 0; z < n; ++z)
            CHECK(dxy <= spherical_vertex_distance(c, x, z) + spherical_vertex_distance(c, z, y));
        }
    }
  }
}

TEST_CASE("link partition examples") {
  const auto g = parse_graph(kTriPendant);
  auto p = link_partition_at(g, parse_vertex_list(g, "a,b"));
  REQUIRE(p.families.size() == 2);
  CHECK(g.name(p.families[0].generator) == "a");
  CHECK(p.families[0].residual == parse_vertex_list(g, "b"));
  CHECK(g.name(p.families[1].generator) == "b");
  CHECK(p.families[1].residual == parse_vertex_list(g, "a"));
  CHECK(p.upward == parse_vertex_list(g, "c"));
  for (const auto& f : p.families) {
    CHECK(f.pairwise_nonadjacent);
    CHECK(f.infinite);
  }

  p = link_partition_at(g, parse_vertex_list(g, "d"));
  CHECK(p.families.size() == 1);
  CHECK(p.upward == parse_vertex_list(g, "c"));

  p = link_partition_at(g, parse_vertex_list(g, "a,b,c"));
  CHECK(p.families.size() == 3);
  CHECK(p.upward == 0);

  CHECK_THROWS_AS(link_partition_at(g, 0), PreconditionError);
  CHECK_THROWS_AS(link_partition_at(g, parse_vertex_list(g, "a,d")), PreconditionError);
}

TEST_CASE("dot output shades triangles") {
  const auto dot = flag_complex(parse_graph(kTriPendant)).to_dot();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
  CHECK(dot.find("fill") != std::string::npos);
}
