#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artin/defining_graph.hpp"
#include "artin/word.hpp"
#include "json.hpp"

namespace artin {

enum class Direction { Up, Down };

// One edge of a path. Up moves g A_T to g A_{T+{s}}. Down moves g A_T to
// g s^power A_{T-{s}}, one of the cosets of A_{T-{s}} inside g A_T.
struct PathStep {
  VertexId label = 0;
  Direction dir = Direction::Up;
  int power = 0;  // Down only

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct EdgePath {
  SymbolicVertex base;  // defaults to A_emptyset
  std::vector<PathStep> steps;

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

// Throws PreconditionError(InvalidPath) naming the first bad step.
void validate_path(const DefiningGraph& g, const EdgePath& path);

// steps.size() + 1 vertices, starting at base.
std::vector<SymbolicVertex> vertex_sequence(const DefiningGraph& g, const EdgePath& path);

enum class CornerKind {
  SameLabel,          // distinct edges with one label never lie in a common cube
  NonAdjacentLabels,  // labels not joined in the defining graph
  AdjacentLabels,     // the two edges may span a square
  Backtrack,          // the second edge retraces the first
};

struct CornerReport {
  std::size_t vertex_index = 0;  // the corner is at vertex_sequence()[vertex_index]
  CornerKind kind = CornerKind::SameLabel;
  bool passes = false;
};

enum class Certification { Certified, NotCertified };

// Certified means every interior corner has angle >= pi, so the path is a
// CAT(0) geodesic. NotCertified says nothing either way.
struct GeodesyCertificate {
  Certification verdict = Certification::Certified;
  std::vector<CornerReport> corners;

  bool certified() const { return verdict == Certification::Certified; }
};

GeodesyCertificate certify_geodesic(const DefiningGraph& g, const EdgePath& path);

struct HyperplaneType {
  VertexId label = 0;
  friend bool operator==(const HyperplaneType&, const HyperplaneType&) = default;
};

std::vector<HyperplaneType> hyperplane_sequence(const EdgePath& path);

// Hyperplanes of types s and t can only cross when s != t are adjacent in g.
bool may_cross(const DefiningGraph& g, HyperplaneType s, HyperplaneType t);

// No two entries (at any distance) may cross.
bool pairwise_noncrossing(const DefiningGraph& g, const std::vector<HyperplaneType>& seq);

// Only neighbouring entries are checked; with `cyclic`, last-first as well.
bool consecutive_noncrossing(const DefiningGraph& g, const std::vector<HyperplaneType>& seq,
                             bool cyclic = false);

bool covers_all_types(const DefiningGraph& g, const std::vector<HyperplaneType>& seq);

std::string to_string(Direction dir);
std::string to_string(CornerKind kind);

// A bare JSON array of steps [{label, dir[, power]}], or an object
// {"base": {"word": "...", "clique": [...]}, "steps": [...]}.
nlohmann::ordered_json path_to_json(const DefiningGraph& g, const EdgePath& path);
EdgePath path_from_json(const DefiningGraph& g, const nlohmann::json& doc);

}  // namespace artin
