// artin-cube: command-line front end for the clique-cube complex toolkit.
//
// Exit codes: 0 success, 2 unreadable or malformed input, 3 the input is
// well-formed but outside the requested operation's domain.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "artin/ball.hpp"
#include "artin/coxeter.hpp"
#include "artin/cube_paths.hpp"
#include "artin/defining_graph.hpp"
#include "artin/flag_links.hpp"
#include "artin/report.hpp"
#include "artin/witness.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace artin;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

ordered_json names_json(const DefiningGraph& g, VertexSet set) {
  auto arr = ordered_json::array();
  for (auto v : members(set)) arr.push_back(g.name(v));
  return arr;
}

ordered_json names_json_letters(const DefiningGraph& g, const std::vector<VertexId>& letters) {
  auto arr = ordered_json::array();
  for (auto v : letters) arr.push_back(g.name(v));
  return arr;
}

ordered_json verdict_json(const DefiningGraph& g, VertexSet clique) {
  const auto verdict = is_finite_type(g, clique);
  auto comps = ordered_json::array();
  for (const auto& c : verdict.components) {
    comps.push_back({{"vertices", names_json(g, c.vertices)}, {"type", c.type.tag()}});
  }
  return {{"clique", names_json(g, clique)}, {"finite", verdict.finite}, {"components", comps}};
}

int run_finite_type(const DefiningGraph& g, const std::string& clique_arg) {
  ordered_json out;
  if (!clique_arg.empty()) {
    out = verdict_json(g, parse_vertex_list(g, clique_arg));
  } else {
    const auto fc = is_fc_type(g);
    auto all = ordered_json::array();
    for (const auto& c : enumerate_cliques(g)) all.push_back(verdict_json(g, c.members));
    auto offending = ordered_json::array();
    for (auto c : fc.offending_cliques) offending.push_back(names_json(g, c));
    out = {{"fc_type", fc.fc}, {"offending_cliques", offending}, {"cliques", all}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_links(const DefiningGraph& g, const std::string& at, const std::string& dot_path, bool json) {
  if (!at.empty()) {
    const auto partition = link_partition_at(g, parse_vertex_list(g, at));
    auto families = ordered_json::array();
    for (const auto& f : partition.families) {
      families.push_back({{"generator", g.name(f.generator)},
                          {"cosets_of", names_json(g, f.residual)},
                          {"pairwise_nonadjacent", f.pairwise_nonadjacent},
                          {"infinite", f.infinite}});
    }
    ordered_json out{{"clique", names_json(g, partition.clique)},
                     {"families", families},
                     {"upward", names_json(g, partition.upward)}};
    if (json) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "link of A_" << g.format_set(partition.clique) << "\n";
      for (const auto& f : partition.families) {
        std::cout << "  family " << g.name(f.generator) << ": cosets g A_" << g.format_set(f.residual)
                  << " (infinite, pairwise non-adjacent)\n";
      }
      if (partition.upward != 0) std::cout << "  upward: " << g.format_set(partition.upward) << "\n";
    }
    return 0;
  }

  const auto complex = flag_complex(g);
  if (!dot_path.empty()) write_file(dot_path, complex.to_dot());
  const auto f = complex.f_vector();
  auto distances = ordered_json::object();
  for (VertexId v = 0; v < g.size(); ++v) {
    auto row = ordered_json::object();
    for (VertexId w = 0; w < g.size(); ++w) row[g.name(w)] = spherical_vertex_distance(complex, v, w).to_string();
    distances[g.name(v)] = row;
  }
  if (json) {
    auto simplices = ordered_json::array();
    for (auto s : complex.simplices()) simplices.push_back(names_json(g, s));
    std::cout << ordered_json{{"f_vector", f}, {"simplices", simplices}, {"distances", distances}}.dump(2) << "\n";
  } else {
    std::cout << "flag complex f-vector:";
    for (auto x : f) std::cout << " " << x;
    std::cout << "\n";
    for (auto s : complex.simplices()) {
      if (cardinality(s) > 1) std::cout << "  simplex " << g.format_set(s) << "\n";
    }
    std::cout << "link distances (multiples of pi/2):\n";
    for (VertexId v = 0; v < g.size(); ++v) {
      std::cout << "  " << g.name(v) << ":";
      for (VertexId w = 0; w < g.size(); ++w) {
        std::cout << " " << spherical_vertex_distance(complex, v, w).to_string();
      }
      std::cout << "\n";
    }
  }
  return 0;
}

ordered_json certificate_json(const GeodesyCertificate& cert) {
  auto corners = ordered_json::array();
  for (const auto& c : cert.corners) {
    corners.push_back({{"vertex", c.vertex_index}, {"kind", to_string(c.kind)}, {"passes", c.passes}});
  }
  return {{"verdict", cert.certified() ? "certified" : "not_certified"}, {"corners", corners}};
}

ordered_json types_json(const DefiningGraph& g, const std::vector<HyperplaneType>& types) {
  auto arr = ordered_json::array();
  for (auto t : types) arr.push_back(g.name(t.label));
  return arr;
}

int run_witness(const DefiningGraph& g, const std::string& kind, bool json) {
  ordered_json out;
  if (kind == "lox") {
    const auto w = loxodromic_word(g);
    const auto checks = check_witness(g, w);
    out = {{"kind", "loxodromic"},
           {"letters", names_json_letters(g, w.letters)},
           {"axis", path_to_json(g, w.axis)},
           {"hyperplanes", types_json(g, hyperplane_sequence(w.axis))},
           {"certificate", certificate_json(checks.axis_certificate)},
           {"valid", checks.valid(WitnessKind::Loxodromic)}};
  } else {
    const auto w = acyl_witness(g);
    out = {{"kind", "acyl"},
           {"g", names_json_letters(g, w.g.letters)},
           {"h", names_json_letters(g, w.h_letters)},
           {"g_axis", path_to_json(g, w.g.axis)},
           {"h_axis", path_to_json(g, w.h_axis)},
           {"g_hyperplanes", types_json(g, hyperplane_sequence(w.g.axis))},
           {"g_certificate", certificate_json(w.g_checks.axis_certificate)},
           {"h_certificate", certificate_json(w.h_certificate)},
           {"covers_all_types", w.g_checks.covers_all_generators},
           {"empty_common_link", w.g_checks.empty_common_link},
           {"consecutive_noncrossing", w.g_checks.consecutive_noncrossing},
           {"pairwise_noncrossing", w.g_checks.pairwise_noncrossing},
           {"divergence",
            {{"positive_at", format_vertex(g, w.positive.at)},
             {"negative_at", format_vertex(g, w.negative.at)},
             {"same_label", w.positive.same_label && w.negative.same_label},
             {"distinct_edges", w.positive.distinct_edges && w.negative.distinct_edges}}},
           {"hyperplane_pair",
            {{"before", {{"step", w.hyperplanes.before_index}, {"type", g.name(w.hyperplanes.before.label)}}},
             {"after", {{"step", w.hyperplanes.after_index}, {"type", g.name(w.hyperplanes.after.label)}}}}},
           {"valid", w.valid()}};
  }
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int run_certify(const DefiningGraph& g, const std::string& path_file, bool json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(path_file));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseErrorKind::Syntax, 0, std::string("path file: ") + e.what());
  }
  const auto path = path_from_json(g, doc);
  const auto cert = certify_geodesic(g, path);
  const auto types = hyperplane_sequence(path);
  ordered_json out{{"certificate", certificate_json(cert)},
                   {"hyperplanes", types_json(g, types)},
                   {"consecutive_noncrossing", consecutive_noncrossing(g, types)},
                   {"pairwise_noncrossing", pairwise_noncrossing(g, types)},
                   {"covers_all_types", covers_all_types(g, types)}};
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (cert.certified() ? "CERTIFIED geodesic" : "NOT CERTIFIED") << "\n";
    const auto vertices = vertex_sequence(g, path);
    for (const auto& c : cert.corners) {
      std::cout << "  corner at " << format_vertex(g, vertices[c.vertex_index]) << ": " << to_string(c.kind)
                << (c.passes ? "" : "  <-- fails") << "\n";
    }
  }
  return 0;
}

int run_ball(const DefiningGraph& g, long radius, long budget, bool serial, const std::string& dot_path,
             const std::string& json_path) {
  std::optional<std::size_t> word_budget;
  if (budget >= 0) word_budget = static_cast<std::size_t>(budget);
  const auto ball = serial ? build_ball_serial(g, radius, word_budget) : build_ball(g, radius, word_budget);
  if (!dot_path.empty()) write_file(dot_path, ball_to_dot(g, ball));
  if (!json_path.empty()) write_file(json_path, ball_to_json(g, ball).dump(2) + "\n");
  std::cout << "radius " << ball.radius << ", word budget " << ball.word_budget << "\n";
  std::cout << "vertices: " << ball.vertices.size() << "\n";
  for (std::size_t d = 1; d <= ball.cubes.size(); ++d) {
    std::cout << d << "-cubes: " << ball.cube_count(d) << "\n";
  }
  if (ball.radius > 0) {
    const auto link = verify_link_base(g, ball);
    std::cout << "lk(A_{}) ~ flag complex: " << (link.isomorphic ? "yes" : "no");
    if (!link.detail.empty()) std::cout << " (" << link.detail << ")";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"artin-cube: clique-cube complex toolkit for Artin groups"};
  app.require_subcommand(1);

  std::string graph_file;
  bool json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "classify the graph and report which theorems apply");
  std::string format = "text";
  analyze_cmd->add_option("graphfile", graph_file, "defining graph ('-' for stdin)")->required();
  analyze_cmd->add_option("--format", format, "text or json");
  analyze_cmd->add_flag("--json", json, "same as --format json");

  auto* finite_cmd = app.add_subcommand("finite-type", "finite-type verdicts for cliques (JSON)");
  std::string clique_arg;
  finite_cmd->add_option("graphfile", graph_file)->required();
  finite_cmd->add_option("--clique", clique_arg, "comma-separated clique; default: every clique");

  auto* links_cmd = app.add_subcommand("links", "flag complex, link distances, link partitions");
  std::string at;
  std::string dot_path;
  links_cmd->add_option("graphfile", graph_file)->required();
  links_cmd->add_option("--at", at, "comma-separated clique T: describe lk(A_T)");
  links_cmd->add_option("--dot", dot_path, "write the flag complex as DOT");
  links_cmd->add_flag("--json", json);

  auto* witness_cmd = app.add_subcommand("witness", "loxodromic / acylindricity witnesses");
  std::string kind = "lox";
  witness_cmd->add_option("graphfile", graph_file)->required();
  witness_cmd->add_option("--kind", kind, "lox or acyl")->check(CLI::IsMember({"lox", "acyl"}));
  witness_cmd->add_flag("--json", json);

  auto* certify_cmd = app.add_subcommand("certify", "certify an edge path as a geodesic");
  std::string path_file;
  certify_cmd->add_option("graphfile", graph_file)->required();
  certify_cmd->add_option("pathfile", path_file, "JSON array of {label, dir[, power]}")->required();
  certify_cmd->add_flag("--json", json);

  auto* ball_cmd = app.add_subcommand("ball", "build a ball of the complex (right-angled graphs)");
  long radius = 0;
  long budget = -1;
  bool serial = false;
  std::string ball_json;
  ball_cmd->add_option("graphfile", graph_file)->required();
  ball_cmd->add_option("--radius", radius, "edge radius around A_{}")->required();
  ball_cmd->add_option("--budget", budget, "word-length budget (default radius/2)");
  ball_cmd->add_option("--dot", dot_path, "write the 1-skeleton as DOT");
  ball_cmd->add_option("--json", ball_json, "write vertices and cubes as JSON");
  ball_cmd->add_flag("--serial", serial, "use the serial reference builder");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto g = parse_graph(slurp(graph_file));
    if (analyze_cmd->parsed()) {
      std::cout << emit(analyze(g), json ? ReportFormat::Json : parse_report_format(format));
      return 0;
    }
    if (finite_cmd->parsed()) return run_finite_type(g, clique_arg);
    if (links_cmd->parsed()) return run_links(g, at, dot_path, json);
    if (witness_cmd->parsed()) return run_witness(g, kind, json);
    if (certify_cmd->parsed()) return run_certify(g, path_file, json);
    if (ball_cmd->parsed()) return run_ball(g, radius, budget, serial, dot_path, ball_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
