#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/defining_graph.hpp"
#include "artin/witness.hpp"
#include "json.hpp"

namespace artin {

inline constexpr int kReportSchemaVersion = 1;

// Verdicts only ever say "yes" or "not decided": every theorem behind them
// is a sufficient condition.
enum class CenterVerdict { Yes, NotDecidedByPaper };
enum class AcylVerdict { Yes, NotDecidedByPaper };
enum class TorsionVerdict { YesViaFiniteTypeCliques, ReducedToCliques };
enum class KPi1Verdict { AllCliquesFiniteTypeFC, ReducedToCliques };

struct CliqueVerdict {
  std::vector<std::string> members;
  bool finite = false;
  std::vector<std::pair<std::vector<std::string>, std::string>> components;  // (vertices, type tag)

  friend bool operator==(const CliqueVerdict&, const CliqueVerdict&) = default;
};

struct WitnessSummary {
  std::vector<std::string> g_letters;
  std::vector<std::string> h_letters;
  bool axis_certified = false;
  bool consecutive_noncrossing = false;
  bool pairwise_noncrossing = false;
  bool covers_all_types = false;
  bool empty_common_link = false;

  friend bool operator==(const WitnessSummary&, const WitnessSummary&) = default;
};

// Everything in the report is stored by generator name so that it survives
// a JSON round trip without the graph.
struct AnalysisReport {
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, int>> edges;
  bool right_angled = false;

  bool is_clique = false;
  std::optional<std::string> star_center;
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> join_factors;

  bool fc_type = false;
  std::vector<std::vector<std::string>> offending_cliques;
  std::vector<CliqueVerdict> maximal_cliques;

  CenterVerdict center_trivial = CenterVerdict::NotDecidedByPaper;
  AcylVerdict acyl_hyperbolic = AcylVerdict::NotDecidedByPaper;
  TorsionVerdict torsion_free = TorsionVerdict::ReducedToCliques;
  KPi1Verdict k_pi_1 = KPi1Verdict::ReducedToCliques;
  std::vector<std::vector<std::string>> reduction_targets;  // the maximal cliques

  std::optional<std::vector<std::string>> loxodromic;  // absent for cliques
  std::optional<WitnessSummary> acyl_witness;          // present iff acyl_hyperbolic == Yes
  std::vector<std::string> notes;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const DefiningGraph& g);

enum class ReportFormat { Text, Json };

// Throws PreconditionError(UnknownFormat).
ReportFormat parse_report_format(std::string_view name);

std::string emit(const AnalysisReport& report, ReportFormat format);
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

// Inverse of report_to_json. Throws std::invalid_argument on a schema
// mismatch.
AnalysisReport report_from_json(const nlohmann::json& doc);

std::string to_string(CenterVerdict v);
std::string to_string(AcylVerdict v);
std::string to_string(TorsionVerdict v);
std::string to_string(KPi1Verdict v);

}  // namespace artin
