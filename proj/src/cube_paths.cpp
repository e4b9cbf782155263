#include "artin/cube_paths.hpp"

#include <algorithm>

namespace artin {

std::string to_string(Direction dir) { return dir == Direction::Up ? "up" : "down"; }

std::string to_string(CornerKind kind) {
  switch (kind) {
    case CornerKind::SameLabel: return "same-label";
    case CornerKind::NonAdjacentLabels: return "non-adjacent-labels";
    case CornerKind::AdjacentLabels: return "adjacent-labels";
    case CornerKind::Backtrack: return "backtrack";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_step(const DefiningGraph& g, std::size_t index, const PathStep& step,
                           const std::string& why) {
  throw PreconditionError(PreconditionKind::InvalidPath,
                          "step " + std::to_string(index) + " (" + to_string(step.dir) + " " +
                              (step.label < g.size() ? g.name(step.label) : std::to_string(step.label)) +
                              "): " + why);
}

}  // namespace

void validate_path(const DefiningGraph& g, const EdgePath& path) {
  if ((path.base.clique & ~g.all()) != 0 || !g.is_clique(path.base.clique)) {
    throw PreconditionError(PreconditionKind::InvalidPath, "base clique is not a clique");
  }
  for (const auto& letter : path.base.word) {
    if (letter.gen >= g.size()) throw PreconditionError(PreconditionKind::InvalidPath, "base word letter");
  }
  VertexSet clique = path.base.clique;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& step = path.steps[i];
    if (step.label >= g.size()) bad_step(g, i, step, "unknown generator");
    if (step.dir == Direction::Up) {
      if (step.power != 0) bad_step(g, i, step, "up-steps carry no power");
      if (contains(clique, step.label)) bad_step(g, i, step, "generator already in the clique");
      if ((clique & ~g.neighbors(step.label)) != 0) bad_step(g, i, step, "result is not a clique");
      clique |= singleton(step.label);
    } else {
      if (!contains(clique, step.label)) bad_step(g, i, step, "generator not in the clique");
      clique &= ~singleton(step.label);
    }
  }
}

std::vector<SymbolicVertex> vertex_sequence(const DefiningGraph& g, const EdgePath& path) {
  validate_path(g, path);
  std::vector<SymbolicVertex> out{path.base};
  out.reserve(path.steps.size() + 1);
  for (const auto& step : path.steps) {
    auto next = out.back();
    if (step.dir == Direction::Up) {
      next.clique |= singleton(step.label);
    } else {
      next.clique &= ~singleton(step.label);
      next.word = concat(std::move(next.word), power(step.label, step.power));
    }
    out.push_back(std::move(next));
  }
  return out;
}

GeodesyCertificate certify_geodesic(const DefiningGraph& g, const EdgePath& path) {
  validate_path(g, path);
  GeodesyCertificate cert;
  for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
    const auto& in = path.steps[i];
    const auto& out = path.steps[i + 1];
    CornerReport corner{i + 1, CornerKind::SameLabel, true};
    if (in.label == out.label) {
      // Up then down through s returns to the start unless it changes coset;
      // down then up through s always returns.
      const bool retraces = in.dir == Direction::Down || out.power == 0;
      if (retraces) corner = {i + 1, CornerKind::Backtrack, false};
    } else if (g.adjacent(in.label, out.label)) {
      corner = {i + 1, CornerKind::AdjacentLabels, false};
    } else {
      corner = {i + 1, CornerKind::NonAdjacentLabels, true};
    }
    if (!corner.passes) cert.verdict = Certification::NotCertified;
    cert.corners.push_back(corner);
  }
  return cert;
}

std::vector<HyperplaneType> hyperplane_sequence(const EdgePath& path) {
  std::vector<HyperplaneType> out;
  out.reserve(path.steps.size());
  for (const auto& step : path.steps) out.push_back({step.label});
  return out;
}

bool may_cross(const DefiningGraph& g, HyperplaneType s, HyperplaneType t) {
  return s.label != t.label && g.adjacent(s.label, t.label);
}

bool pairwise_noncrossing(const DefiningGraph& g, const std::vector<HyperplaneType>& seq) {
  VertexSet seen = 0;
  for (const auto& h : seq) {
    if ((seen & g.neighbors(h.label)) != 0) return false;
    seen |= singleton(h.label);
  }
  return true;
}

bool consecutive_noncrossing(const DefiningGraph& g, const std::vector<HyperplaneType>& seq,
                             bool cyclic) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (may_cross(g, seq[i], seq[i + 1])) return false;
  }
  if (cyclic && seq.size() > 1 && may_cross(g, seq.back(), seq.front())) return false;
  return true;
}

bool covers_all_types(const DefiningGraph& g, const std::vector<HyperplaneType>& seq) {
  VertexSet seen = 0;
  for (const auto& h : seq) seen |= singleton(h.label);
  return seen == g.all();
}

nlohmann::ordered_json path_to_json(const DefiningGraph& g, const EdgePath& path) {
  auto steps = nlohmann::ordered_json::array();
  for (const auto& step : path.steps) {
    nlohmann::ordered_json s{{"label", g.name(step.label)}, {"dir", to_string(step.dir)}};
    if (step.dir == Direction::Down) s["power"] = step.power;
    steps.push_back(std::move(s));
  }
  if (path.base.word.empty() && path.base.clique == 0) return steps;
  auto clique = nlohmann::ordered_json::array();
  for (auto v : members(path.base.clique)) clique.push_back(g.name(v));
  return {{"base", {{"word", format_word(g, path.base.word)}, {"clique", clique}}}, {"steps", steps}};
}

EdgePath path_from_json(const DefiningGraph& g, const nlohmann::json& doc) {
  auto fail = [](const std::string& why) { throw PreconditionError(PreconditionKind::InvalidPath, why); };
  EdgePath path;
  const nlohmann::json* steps = &doc;
  if (doc.is_object()) {
    if (!doc.contains("steps")) fail("path object needs 'steps'");
    steps = &doc["steps"];
    if (doc.contains("base")) {
      const auto& base = doc["base"];
      if (base.contains("word")) path.base.word = parse_word(g, base["word"].get<std::string>());
      if (base.contains("clique")) {
        for (const auto& name : base["clique"]) path.base.clique |= singleton(g.index_of(name.get<std::string>()));
      }
    }
  }
  if (!steps->is_array()) fail("steps must be an array");
  for (const auto& s : *steps) {
    if (!s.is_object() || !s.contains("label") || !s.contains("dir")) fail("step must be {label, dir}");
    PathStep step;
    step.label = g.index_of(s["label"].get<std::string>());
    const auto dir = s["dir"].get<std::string>();
    if (dir == "up") {
      step.dir = Direction::Up;
    } else if (dir == "down") {
      step.dir = Direction::Down;
    } else {
      fail("dir must be 'up' or 'down'");
    }
    if (s.contains("power")) step.power = s["power"].get<int>();
    path.steps.push_back(step);
  }
  validate_path(g, path);
  return path;
}

}  // namespace artin
