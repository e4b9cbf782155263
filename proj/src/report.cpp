#include "artin/report.hpp"

#include <sstream>
#include <stdexcept>

namespace artin {

std::string to_string(CenterVerdict v) {
  return v == CenterVerdict::Yes ? "yes" : "not_decided_by_paper";
}
std::string to_string(AcylVerdict v) { return v == AcylVerdict::Yes ? "yes" : "not_decided_by_paper"; }
std::string to_string(TorsionVerdict v) {
  return v == TorsionVerdict::YesViaFiniteTypeCliques ? "yes_via_finite_type_cliques" : "reduced_to_cliques";
}
std::string to_string(KPi1Verdict v) {
  return v == KPi1Verdict::AllCliquesFiniteTypeFC ? "all_cliques_finite_type_fc" : "reduced_to_cliques";
}

namespace {

std::vector<std::string> names_of(const DefiningGraph& g, VertexSet set) {
  std::vector<std::string> out;
  for (auto v : members(set)) out.push_back(g.name(v));
  return out;
}

std::vector<std::string> names_of(const DefiningGraph& g, const std::vector<VertexId>& letters) {
  std::vector<std::string> out;
  for (auto v : letters) out.push_back(g.name(v));
  return out;
}

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

std::string spaced(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " " : "") + names[i];
  return out;
}

template <typename Enum>
Enum enum_from(const std::string& text, std::initializer_list<Enum> options) {
  for (auto e : options) {
    if (to_string(e) == text) return e;
  }
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

}  // namespace

AnalysisReport analyze(const DefiningGraph& g) {
  AnalysisReport r;
  r.vertices = g.names();
  for (const auto& e : g.edges()) r.edges.emplace_back(g.name(e.a), g.name(e.b), e.label);
  r.right_angled = g.right_angled();

  const auto cls = classify(g);
  r.is_clique = cls.is_clique;
  if (cls.star_center) r.star_center = g.name(*cls.star_center);
  if (cls.join_factors) {
    r.join_factors = std::pair(names_of(g, cls.join_factors->first), names_of(g, cls.join_factors->second));
  }

  const auto fc = is_fc_type(g);
  r.fc_type = fc.fc;
  for (auto c : fc.offending_cliques) r.offending_cliques.push_back(names_of(g, c));
  for (auto c : maximal_cliques(g)) {
    const auto verdict = is_finite_type(g, c);
    CliqueVerdict cv{names_of(g, c), verdict.finite, {}};
    for (const auto& comp : verdict.components) cv.components.emplace_back(names_of(g, comp.vertices), comp.type.tag());
    r.maximal_cliques.push_back(std::move(cv));
    r.reduction_targets.push_back(names_of(g, c));
  }

  r.center_trivial = cls.star_center ? CenterVerdict::NotDecidedByPaper : CenterVerdict::Yes;
  r.torsion_free = fc.fc ? TorsionVerdict::YesViaFiniteTypeCliques : TorsionVerdict::ReducedToCliques;
  r.k_pi_1 = fc.fc ? KPi1Verdict::AllCliquesFiniteTypeFC : KPi1Verdict::ReducedToCliques;

  if (!cls.is_clique) r.loxodromic = names_of(g, loxodromic_word(g).letters);

  if (!cls.join_factors && g.size() >= 2) {
    r.acyl_hyperbolic = AcylVerdict::Yes;
    const auto w = acyl_witness(g);
    r.acyl_witness = WitnessSummary{names_of(g, w.g.letters),
                                    names_of(g, w.h_letters),
                                    w.g_checks.axis_certificate.certified() && w.h_certificate.certified(),
                                    w.g_checks.consecutive_noncrossing && w.h_consecutive_noncrossing,
                                    w.g_checks.pairwise_noncrossing,
                                    w.g_checks.covers_all_generators,
                                    w.g_checks.empty_common_link};
  }

  if (cls.is_clique) {
    r.notes.push_back("the defining graph is a clique: the clique-cube complex has finite diameter "
                      "and the action has a global fixed point");
  }
  if (cls.star_center) {
    r.notes.push_back("the defining graph is the star of " + g.name(*cls.star_center) +
                      ": the star test does not decide whether the center is trivial");
  }
  if (cls.join_factors) {
    r.notes.push_back("the defining graph is a join: the join test does not decide acylindrical hyperbolicity");
  }
  if (g.size() < 2) {
    r.notes.push_back("a single generator gives the infinite cyclic group");
  }
  return r;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw PreconditionError(PreconditionKind::UnknownFormat, std::string(name));
}

nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;

  auto edges = ordered_json::array();
  for (const auto& [a, b, m] : r.edges) edges.push_back({{"a", a}, {"b", b}, {"m", m}});
  doc["graph"] = {{"vertices", r.vertices}, {"edges", edges}, {"right_angled", r.right_angled}};

  ordered_json cls;
  cls["is_clique"] = r.is_clique;
  cls["star_center"] = r.star_center ? ordered_json(*r.star_center) : ordered_json(nullptr);
  cls["join_factors"] =
      r.join_factors ? ordered_json::array({r.join_factors->first, r.join_factors->second}) : ordered_json(nullptr);
  doc["classification"] = cls;

  doc["fc_type"] = {{"fc", r.fc_type}, {"offending_cliques", r.offending_cliques}};

  auto cliques = ordered_json::array();
  for (const auto& c : r.maximal_cliques) {
    auto comps = ordered_json::array();
    for (const auto& [verts, tag] : c.components) comps.push_back({{"vertices", verts}, {"type", tag}});
    cliques.push_back({{"members", c.members}, {"finite", c.finite}, {"components", comps}});
  }
  doc["maximal_cliques"] = cliques;

  doc["verdicts"] = {
      {"center_trivial", to_string(r.center_trivial)},
      {"acyl_hyperbolic", to_string(r.acyl_hyperbolic)},
      {"torsion_free", to_string(r.torsion_free)},
      {"k_pi_1", to_string(r.k_pi_1)},
      {"reduction_targets", r.reduction_targets},
  };

  ordered_json witnesses;
  witnesses["loxodromic"] = r.loxodromic ? ordered_json(*r.loxodromic) : ordered_json(nullptr);
  if (r.acyl_witness) {
    const auto& w = *r.acyl_witness;
    witnesses["acyl"] = {{"g", w.g_letters},
                         {"h", w.h_letters},
                         {"axis_certified", w.axis_certified},
                         {"consecutive_noncrossing", w.consecutive_noncrossing},
                         {"pairwise_noncrossing", w.pairwise_noncrossing},
                         {"covers_all_types", w.covers_all_types},
                         {"empty_common_link", w.empty_common_link}};
  } else {
    witnesses["acyl"] = nullptr;
  }
  doc["witnesses"] = witnesses;
  doc["notes"] = r.notes;
  return doc;
}

AnalysisReport report_from_json(const nlohmann::json& doc) {
  using Names = std::vector<std::string>;
  if (!doc.is_object() || doc.value("schema_version", 0) != kReportSchemaVersion) {
    throw std::invalid_argument("not an analysis report with schema_version " +
                                std::to_string(kReportSchemaVersion));
  }
  try {
    AnalysisReport r;
    const auto& graph = doc.at("graph");
    r.vertices = graph.at("vertices").get<Names>();
    for (const auto& e : graph.at("edges")) {
      r.edges.emplace_back(e.at("a").get<std::string>(), e.at("b").get<std::string>(), e.at("m").get<int>());
    }
    r.right_angled = graph.at("right_angled").get<bool>();

    const auto& cls = doc.at("classification");
    r.is_clique = cls.at("is_clique").get<bool>();
    if (!cls.at("star_center").is_null()) r.star_center = cls.at("star_center").get<std::string>();
    if (!cls.at("join_factors").is_null()) {
      r.join_factors = std::pair(cls.at("join_factors").at(0).get<Names>(), cls.at("join_factors").at(1).get<Names>());
    }

    r.fc_type = doc.at("fc_type").at("fc").get<bool>();
    r.offending_cliques = doc.at("fc_type").at("offending_cliques").get<std::vector<Names>>();
    for (const auto& c : doc.at("maximal_cliques")) {
      CliqueVerdict cv{c.at("members").get<Names>(), c.at("finite").get<bool>(), {}};
      for (const auto& comp : c.at("components")) {
        cv.components.emplace_back(comp.at("vertices").get<Names>(), comp.at("type").get<std::string>());
      }
      r.maximal_cliques.push_back(std::move(cv));
    }

    const auto& v = doc.at("verdicts");
    r.center_trivial = enum_from(v.at("center_trivial").get<std::string>(),
                                 {CenterVerdict::Yes, CenterVerdict::NotDecidedByPaper});
    r.acyl_hyperbolic = enum_from(v.at("acyl_hyperbolic").get<std::string>(),
                                  {AcylVerdict::Yes, AcylVerdict::NotDecidedByPaper});
    r.torsion_free = enum_from(v.at("torsion_free").get<std::string>(),
                               {TorsionVerdict::YesViaFiniteTypeCliques, TorsionVerdict::ReducedToCliques});
    r.k_pi_1 = enum_from(v.at("k_pi_1").get<std::string>(),
                         {KPi1Verdict::AllCliquesFiniteTypeFC, KPi1Verdict::ReducedToCliques});
    r.reduction_targets = v.at("reduction_targets").get<std::vector<Names>>();

    const auto& w = doc.at("witnesses");
    if (!w.at("loxodromic").is_null()) r.loxodromic = w.at("loxodromic").get<Names>();
    if (!w.at("acyl").is_null()) {
      const auto& a = w.at("acyl");
      r.acyl_witness = WitnessSummary{a.at("g").get<Names>(),
                                      a.at("h").get<Names>(),
                                      a.at("axis_certified").get<bool>(),
                                      a.at("consecutive_noncrossing").get<bool>(),
                                      a.at("pairwise_noncrossing").get<bool>(),
                                      a.at("covers_all_types").get<bool>(),
                                      a.at("empty_common_link").get<bool>()};
    }
    r.notes = doc.at("notes").get<Names>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string text_report(const AnalysisReport& r) {
  std::ostringstream out;
  out << "vertices: " << spaced(r.vertices) << "\n";
  out << "edges:";
  if (r.edges.empty()) out << " (none)";
  for (const auto& [a, b, m] : r.edges) out << " " << a << "-" << b << ":" << m;
  out << "\n";
  out << "right-angled: " << (r.right_angled ? "yes" : "no") << "\n";
  out << "clique: " << (r.is_clique ? "yes" : "no") << "\n";
  out << "star of vertex: " << r.star_center.value_or("none") << "\n";
  if (r.join_factors) {
    out << "join: " << braces(r.join_factors->first) << " * " << braces(r.join_factors->second) << "\n";
  } else {
    out << "join: no\n";
  }
  out << "FC type: " << (r.fc_type ? "yes" : "no");
  if (!r.offending_cliques.empty()) {
    out << " (infinite type:";
    for (const auto& c : r.offending_cliques) out << " " << braces(c);
    out << ")";
  }
  out << "\n";
  for (const auto& c : r.maximal_cliques) {
    out << "maximal clique " << braces(c.members) << ": " << (c.finite ? "finite type" : "infinite type") << " [";
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      out << (i ? " x " : "") << c.components[i].second;
    }
    out << "]\n";
  }

  out << "trivial center: "
      << (r.center_trivial == CenterVerdict::Yes ? "YES (Theorem 3.3)" : "NOT DECIDED (graph is a star)") << "\n";
  out << "acylindrically hyperbolic: "
      << (r.acyl_hyperbolic == AcylVerdict::Yes
              ? "YES (Theorem 4.3)"
              : (r.vertices.size() < 2 ? "NOT DECIDED (single vertex)" : "NOT DECIDED (graph is a join)"))
      << "\n";
  std::string targets;
  for (const auto& c : r.reduction_targets) targets += " " + braces(c);
  out << "torsion-free: "
      << (r.torsion_free == TorsionVerdict::YesViaFiniteTypeCliques
              ? "YES (every clique is of finite type; Theorem 5.1)"
              : "REDUCED TO CLIQUES" + targets + " (Theorem 5.1)")
      << "\n";
  out << "K(pi,1): "
      << (r.k_pi_1 == KPi1Verdict::AllCliquesFiniteTypeFC ? "YES (FC type; every clique is of finite type)"
                                                          : "REDUCED TO CLIQUES" + targets + " (Theorem 5.2)")
      << "\n";
  if (r.loxodromic) out << "loxodromic element: " << spaced(*r.loxodromic) << "\n";
  if (r.acyl_witness) {
    const auto& w = *r.acyl_witness;
    out << "witness g: " << spaced(w.g_letters) << "\n";
    out << "witness h: " << spaced(w.h_letters) << "\n";
    out << "witness axes certified: " << (w.axis_certified ? "yes" : "no") << "\n";
    out << "witness consecutive hyperplanes disjoint: " << (w.consecutive_noncrossing ? "yes" : "no") << "\n";
    out << "witness all hyperplanes pairwise disjoint (label test): " << (w.pairwise_noncrossing ? "yes" : "no")
        << "\n";
  }
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace

std::string emit(const AnalysisReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(report).dump(2) + "\n";
  return text_report(report);
}

}  // namespace artin
