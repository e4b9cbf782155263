#include <algorithm>
#include <fstream>
#include <sstream>

#include "artin/error.hpp"
#include "artin/report.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace artin;

namespace {

const char* kTriPendant = "vertices: a b c d\nedges: a-b:3 b-c:3 a-c:3 c-d:2\n";
const char* kP4 = "vertices: a b c d\nedges: a-b:2 b-c:2 c-d:2\n";
const char* kC4 = "vertices: a b c d\nedges: a-b:2 b-c:2 c-d:2 d-a:2\n";

using Names = std::vector<std::string>;

}  // namespace

TEST_CASE("triangle with pendant edge report") {
  const auto r = analyze(parse_graph(kTriPendant));
  CHECK(r.star_center == "c");
  REQUIRE(r.join_factors.has_value());
  CHECK(r.join_factors->first == Names{"c"});
  CHECK(r.join_factors->second == Names{"a", "b", "d"});
  CHECK(r.center_trivial == CenterVerdict::NotDecidedByPaper);
  CHECK(r.acyl_hyperbolic == AcylVerdict::NotDecidedByPaper);
  CHECK_FALSE(r.acyl_witness.has_value());
  auto targets = r.reduction_targets;
  std::sort(targets.begin(), targets.end());
  CHECK(targets == std::vector<Names>{{"a", "b", "c"}, {"c", "d"}});
  CHECK(r.torsion_free == TorsionVerdict::ReducedToCliques);
  CHECK(r.k_pi_1 == KPi1Verdict::ReducedToCliques);
  CHECK(r.offending_cliques == std::vector<Names>{{"a", "b", "c"}});

  const auto text = emit(r, ReportFormat::Text);
  CHECK(text.find("star of vertex: c\n") != std::string::npos);
}

TEST_CASE("P4 and C4 reports") {
  const auto p4 = analyze(parse_graph(kP4));
  CHECK(p4.center_trivial == CenterVerdict::Yes);
  CHECK(p4.acyl_hyperbolic == AcylVerdict::Yes);
  REQUIRE(p4.acyl_witness.has_value());
  CHECK(p4.acyl_witness->axis_certified);
  CHECK(p4.acyl_witness->covers_all_types);
  CHECK(p4.torsion_free == TorsionVerdict::YesViaFiniteTypeCliques);
  CHECK(p4.k_pi_1 == KPi1Verdict::AllCliquesFiniteTypeFC);
  CHECK(emit(p4, ReportFormat::Text).find("acylindrically hyperbolic: YES (Theorem 4.3)") != std::string::npos);

  // any labels on the path give the same two verdicts
  const auto labeled = analyze(parse_graph("vertices: a b c d\nedges: a-b:5 b-c:3 c-d:7"));
  CHECK(labeled.center_trivial == CenterVerdict::Yes);
  CHECK(labeled.acyl_hyperbolic == AcylVerdict::Yes);

  const auto c4 = analyze(parse_graph(kC4));
  CHECK(c4.center_trivial == CenterVerdict::Yes);
  CHECK(c4.acyl_hyperbolic == AcylVerdict::NotDecidedByPaper);
}

TEST_CASE("verdict vocabulary never says no") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto r = analyze(oracle::graph_from_mask(4, mask));
    const auto doc = report_to_json(r);
    for (const auto& [key, value] : doc["verdicts"].items()) {
      if (value.is_string()) CHECK(value.get<std::string>() != "no");
    }
  }
}

TEST_CASE("unknown format") {
  CHECK(parse_report_format("text") == ReportFormat::Text);
  CHECK(parse_report_format("json") == ReportFormat::Json);
  CHECK_THROWS_AS(parse_report_format("yaml"), PreconditionError);
}

TEST_CASE("invariants over every graph up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const auto g = oracle::graph_from_mask(n, mask);
      const auto r = analyze(g);
      CAPTURE(n);
      CAPTURE(mask);
      CHECK((r.center_trivial == CenterVerdict::Yes) == !oracle::star_center(g).has_value());
      CHECK((r.acyl_hyperbolic == AcylVerdict::Yes) == (!oracle::is_join(g) && n >= 2));
      CHECK(r.acyl_witness.has_value() == (r.acyl_hyperbolic == AcylVerdict::Yes));
      if (r.acyl_hyperbolic == AcylVerdict::Yes) CHECK(r.center_trivial == CenterVerdict::Yes);
      CHECK(r.reduction_targets.size() == maximal_cliques(g).size());
    }
  }
}

TEST_CASE("JSON round trip") {
  for (const char* text : {kTriPendant, kP4, kC4, "vertices: s", "vertices: a b\nedges: a-b:4",
                           "vertices: a b c\nedges: a-b:3 b-c:3 a-c:3"}) {
    const auto r = analyze(parse_graph(text));
    const auto doc = nlohmann::json::parse(emit(r, ReportFormat::Json));
    CHECK(doc["schema_version"] == kReportSchemaVersion);
    CHECK(report_from_json(doc) == r);
  }
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"schema_version": 99})")), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"schema_version": 1})")), std::invalid_argument);
}

TEST_CASE("analysis depends only on the parsed graph") {
  const auto a = analyze(parse_graph(kTriPendant));
  const auto b = analyze(parse_graph("# same graph\nvertices: a b c d\nedge: c-d:2\nedge: a-c:3\nedges: b-c:3 a-b:3\n"));
  const auto c = analyze(parse_graph(
      R"({"vertices":["a","b","c","d"],"edges":[{"a":"a","b":"b","m":3},{"a":"b","b":"c","m":3},{"a":"a","b":"c","m":3},{"a":"c","b":"d","m":2}]})"));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(emit(a, ReportFormat::Json) == emit(c, ReportFormat::Json));
}

TEST_CASE("committed goldens match") {
  for (const char* name : {"single_vertex", "single_edge", "triangle", "p4", "c4", "tri_pendant"}) {
    CAPTURE(name);
    std::ifstream graph_in(std::string(ARTIN_TEST_DATA) + "/data/" + name + ".txt");
    std::ifstream golden_in(std::string(ARTIN_TEST_DATA) + "/golden/" + name + ".json");
    REQUIRE(graph_in.good());
    REQUIRE(golden_in.good());
    std::stringstream graph_text;
    graph_text << graph_in.rdbuf();
    const auto golden = nlohmann::json::parse(golden_in);
    const auto actual = nlohmann::json::parse(emit(analyze(parse_graph(graph_text.str())), ReportFormat::Json));
    CHECK(actual == golden);
  }
}
