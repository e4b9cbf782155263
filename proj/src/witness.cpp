#include "artin/witness.hpp"

#include <functional>

namespace artin {

EdgePath axis_path(const std::vector<Syllable>& syllables) {
  EdgePath path;
  for (const auto& syl : syllables) {
    path.steps.push_back({syl.gen, Direction::Up, 0});
    path.steps.push_back({syl.gen, Direction::Down, syl.exponent});
  }
  return path;
}

EdgePath unroll(const EdgePath& period, std::size_t periods) {
  EdgePath out{period.base, {}};
  out.steps.reserve(period.steps.size() * periods);
  for (std::size_t i = 0; i < periods; ++i) {
    out.steps.insert(out.steps.end(), period.steps.begin(), period.steps.end());
  }
  return out;
}

namespace {

std::vector<Syllable> unit_syllables(const std::vector<VertexId>& letters) {
  std::vector<Syllable> out;
  for (auto s : letters) out.push_back({s, 1});
  return out;
}

}  // namespace

bool WitnessChecks::valid(WitnessKind kind) const {
  const bool base = consecutive_nonadjacent && wraparound_nonadjacent && axis_certificate.certified() &&
                    consecutive_noncrossing;
  if (kind == WitnessKind::Loxodromic) return base;
  return base && covers_all_generators && empty_common_link;
}

WitnessChecks check_witness(const DefiningGraph& g, const WitnessWord& w) {
  WitnessChecks out;
  const auto& s = w.letters;
  if (s.empty()) return out;
  out.consecutive_nonadjacent = true;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == s[i + 1] || g.adjacent(s[i], s[i + 1])) out.consecutive_nonadjacent = false;
  }
  out.wraparound_nonadjacent = s.front() != s.back() && !g.adjacent(s.front(), s.back());

  VertexSet seen = 0;
  VertexSet common = g.all();
  for (auto v : s) {
    seen |= singleton(v);
    common &= g.neighbors(v);
  }
  out.covers_all_generators = seen == g.all();
  out.empty_common_link = common == 0;

  out.axis_certificate = certify_geodesic(g, unroll(w.axis, 2));
  const auto types = hyperplane_sequence(w.axis);
  out.consecutive_noncrossing = consecutive_noncrossing(g, types, /*cyclic=*/true);
  out.pairwise_noncrossing = pairwise_noncrossing(g, types);
  return out;
}

WitnessWord loxodromic_word(const DefiningGraph& g) {
  for (VertexId s = 0; s < g.size(); ++s) {
    for (VertexId t = s + 1; t < g.size(); ++t) {
      if (!g.adjacent(s, t)) {
        WitnessWord w{WitnessKind::Loxodromic, {s, t}, axis_path({{s, 1}, {t, 1}}), true};
        return w;
      }
    }
  }
  throw PreconditionError(PreconditionKind::CliqueGraph,
                          "every pair of generators is joined; the complex has finite diameter");
}

namespace {

void require_non_join(const DefiningGraph& g) {
  if (g.size() < 2) throw PreconditionError(PreconditionKind::TooFewVertices, "need at least two generators");
  if (components(complement(g)).size() > 1) {
    throw PreconditionError(PreconditionKind::JoinGraph, "the complement graph is disconnected");
  }
}

}  // namespace

WitnessWord full_cover_word(const DefiningGraph& g) {
  require_non_join(g);
  const auto comp = complement(g);
  std::vector<VertexId> walk;
  VertexSet visited = 0;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    visited |= singleton(v);
    walk.push_back(v);
    for (auto child : members(comp.adjacency[v])) {
      if (contains(visited, child)) continue;
      visit(child);
      walk.push_back(v);
    }
  };
  visit(0);
  walk.pop_back();  // the tour ends where it started; the word is read cyclically
  WitnessWord w{WitnessKind::FullCover, walk, axis_path(unit_syllables(walk)), true};
  return w;
}

bool AcylWitness::valid() const {
  const long period = static_cast<long>(g.axis.steps.size());
  return g_checks.valid(WitnessKind::FullCover) && h_certificate.certified() && h_consecutive_noncrossing &&
         positive.same_label && positive.distinct_edges && negative.same_label && negative.distinct_edges &&
         negative_base_shared && hyperplanes.before_index < 0 && hyperplanes.after_index >= period;
}

AcylWitness acyl_witness(const DefiningGraph& g) {
  AcylWitness out;
  out.g = full_cover_word(g);
  const auto& letters = out.g.letters;
  const auto s1 = letters.front();
  const auto sk = letters.back();

  out.h_letters = letters;
  out.h_letters.insert(out.h_letters.begin(), s1);
  auto syllables = unit_syllables(letters);
  syllables.front().exponent = 2;
  out.h_axis = axis_path(syllables);

  // y = A_{s1}: the axis of g continues to s1 A_0, the axis of h to s1^2 A_0.
  out.positive.at = SymbolicVertex{{}, singleton(s1)};
  out.positive.g_edge = out.g.axis.steps[1];
  out.positive.h_edge = out.h_axis.steps[1];

  // g^-1 y = s_k^-1 ... s_2^-1 s_1^-1 A_{s1} and h^-1 y = s_k^-1 ... s_2^-1 s_1^-2 A_{s1}.
  // Both words end in powers of s1, which A_{s1} absorbs.
  Word g_inv;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) g_inv.push_back({*it, true});
  Word h_inv = g_inv;
  h_inv.push_back({s1, true});
  auto strip_s1 = [s1](Word w) {
    while (!w.empty() && w.back().gen == s1) w.pop_back();
    return w;
  };
  out.negative_base_shared = strip_s1(g_inv) == strip_s1(h_inv);
  out.negative.at = SymbolicVertex{strip_s1(g_inv), singleton(s1)};
  // From there the rays head to g^-1 A_0 = (...) s1^-1 A_0 and h^-1 A_0 = (...) s1^-2 A_0.
  out.negative.g_edge = PathStep{s1, Direction::Down, -1};
  out.negative.h_edge = PathStep{s1, Direction::Down, -2};

  for (auto* note : {&out.positive, &out.negative}) {
    note->same_label = note->g_edge.label == note->h_edge.label;
    // Same label, same source, different powers of s1 (which has infinite order).
    note->distinct_edges = note->g_edge.dir == Direction::Down && note->h_edge.dir == Direction::Down &&
                           note->g_edge.power != note->h_edge.power;
  }

  const auto period = static_cast<long>(out.g.axis.steps.size());
  out.hyperplanes = HyperplanePair{-1, {sk}, period, {s1}};

  out.g_checks = check_witness(g, out.g);
  out.h_certificate = certify_geodesic(g, unroll(out.h_axis, 2));
  const auto h_types = hyperplane_sequence(out.h_axis);
  out.h_consecutive_noncrossing = consecutive_noncrossing(g, h_types, true);
  out.h_pairwise_noncrossing = pairwise_noncrossing(g, h_types);
  return out;
}

}  // namespace artin
