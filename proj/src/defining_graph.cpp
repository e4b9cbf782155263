#include "artin/defining_graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace artin {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::DuplicateVertex: return "duplicate vertex";
    case ParseErrorKind::LabelTooSmall: return "label < 2";
    case ParseErrorKind::NonIntegerLabel: return "non-integer label";
    case ParseErrorKind::InfiniteLabel: return "explicit infinite label";
    case ParseErrorKind::UnknownEndpoint: return "unknown endpoint";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::EmptyGraph: return "empty graph";
  }
  return "parse error";
}

std::string_view to_string(PreconditionKind kind) {
  switch (kind) {
    case PreconditionKind::UnknownVertex: return "unknown vertex";
    case PreconditionKind::NotAClique: return "not a clique";
    case PreconditionKind::EmptyClique: return "empty clique";
    case PreconditionKind::CliqueGraph: return "graph is a clique";
    case PreconditionKind::JoinGraph: return "graph is a join";
    case PreconditionKind::TooFewVertices: return "too few vertices";
    case PreconditionKind::NotRightAngled: return "graph is not right-angled";
    case PreconditionKind::InvalidPath: return "invalid edge path";
    case PreconditionKind::NegativeRadius: return "negative radius";
    case PreconditionKind::UnknownFormat: return "unknown format";
  }
  return "precondition violated";
}

namespace {

std::string parse_message(ParseErrorKind kind, std::size_t line, const std::string& detail) {
  std::ostringstream out;
  if (line > 0) out << "line " << line << ": ";
  out << to_string(kind);
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error(parse_message(kind, line, detail)), kind_(kind), line_(line) {}

PreconditionError::PreconditionError(PreconditionKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind) {}

std::vector<VertexId> members(VertexSet set) {
  std::vector<VertexId> out;
  out.reserve(cardinality(set));
  for (; set != 0; set &= set - 1) out.push_back(lowest(set));
  return out;
}

bool canonical_less(VertexSet lhs, VertexSet rhs) {
  const auto nl = cardinality(lhs);
  const auto nr = cardinality(rhs);
  if (nl != nr) return nl < nr;
  while (lhs != 0 && rhs != 0) {
    const auto a = lowest(lhs);
    const auto b = lowest(rhs);
    if (a != b) return a < b;
    lhs &= lhs - 1;
    rhs &= rhs - 1;
  }
  return false;
}

DefiningGraph::DefiningGraph(std::vector<std::string> names, const std::vector<Edge>& edges)
    : names_(std::move(names)) {
  const auto n = names_.size();
  if (n == 0) throw std::invalid_argument("defining graph needs at least one vertex");
  if (n > kMaxVertices) throw std::invalid_argument("defining graph has more than 64 vertices");
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw std::invalid_argument("empty vertex name");
      if (!seen.insert(name).second) throw std::invalid_argument("duplicate vertex " + name);
    }
  }
  neighbors_.assign(n, 0);
  labels_.assign(n * n, 0);
  for (auto e : edges) {
    if (e.a >= n || e.b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.a == e.b) throw std::invalid_argument("self-loop at " + names_[e.a]);
    if (e.label < 2) throw std::invalid_argument("edge label < 2");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (labels_[e.a * n + e.b] != 0) throw std::invalid_argument("duplicate edge");
    labels_[e.a * n + e.b] = labels_[e.b * n + e.a] = e.label;
    neighbors_[e.a] |= singleton(e.b);
    neighbors_[e.b] |= singleton(e.a);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
}

std::optional<VertexId> DefiningGraph::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId DefiningGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw PreconditionError(PreconditionKind::UnknownVertex, std::string(name));
}

VertexSet DefiningGraph::all() const noexcept {
  return size() == kMaxVertices ? ~VertexSet{0} : singleton(size()) - 1;
}

std::optional<int> DefiningGraph::label(VertexId u, VertexId v) const {
  const int m = labels_.at(u * size() + v);
  if (m == 0) return std::nullopt;
  return m;
}

bool DefiningGraph::is_clique(VertexSet set) const {
  for (auto rest = set; rest != 0; rest &= rest - 1) {
    const auto v = lowest(rest);
    if ((set & ~singleton(v) & ~neighbors_[v]) != 0) return false;
  }
  return true;
}

bool DefiningGraph::right_angled() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.label == 2; });
}

std::string DefiningGraph::format_set(VertexSet set) const {
  std::string out = "{";
  bool first = true;
  for (auto v : members(set)) {
    if (!first) out += ',';
    out += names_.at(v);
    first = false;
  }
  return out + "}";
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adjacency) twice += cardinality(row);
  return twice / 2;
}

// ---------------------------------------------------------------------------
// Readers and writers

namespace {

struct PendingEdge {
  std::string a;
  std::string b;
  int label;
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '-' || c == ':' || c == ',' || c == ';' || c == '#' || c == '{' || c == '}' ||
           c == ' ' || c == '\t';
  });
}

bool is_infinity(std::string_view s) {
  return s == "inf" || s == "Inf" || s == "INF" || s == "infinity" || s == "oo" || s == "∞";
}

int parse_label(std::string_view text, std::size_t line) {
  if (is_infinity(text)) {
    throw ParseError(ParseErrorKind::InfiniteLabel, line,
                     "omit the edge instead of writing '" + std::string(text) + "'");
  }
  long long value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || value > 1'000'000'000LL) {
    throw ParseError(ParseErrorKind::NonIntegerLabel, line, "'" + std::string(text) + "'");
  }
  if (value < 2) {
    throw ParseError(ParseErrorKind::LabelTooSmall, line, std::to_string(value));
  }
  return static_cast<int>(value);
}

PendingEdge parse_edge_token(std::string_view token, std::size_t line) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(ParseErrorKind::Syntax, line,
                     "expected name-name:label, got '" + std::string(token) + "'");
  }
  const auto ends = token.substr(0, colon);
  const auto dash = ends.find('-');
  if (dash == std::string_view::npos) {
    throw ParseError(ParseErrorKind::Syntax, line,
                     "expected name-name:label, got '" + std::string(token) + "'");
  }
  const auto a = ends.substr(0, dash);
  const auto b = ends.substr(dash + 1);
  if (!valid_name(a) || !valid_name(b)) {
    throw ParseError(ParseErrorKind::Syntax, line, "bad endpoint in '" + std::string(token) + "'");
  }
  const int m = parse_label(token.substr(colon + 1), line);
  if (a == b) throw ParseError(ParseErrorKind::SelfLoop, line, std::string(a));
  return {std::string(a), std::string(b), m, line};
}

DefiningGraph assemble(std::vector<std::pair<std::string, std::size_t>> declared,
                       const std::vector<PendingEdge>& pending, std::size_t last_line) {
  if (declared.empty()) throw ParseError(ParseErrorKind::EmptyGraph, last_line, "no vertices declared");
  std::vector<std::string> names;
  for (auto& [name, line] : declared) {
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ParseError(ParseErrorKind::DuplicateVertex, line, name);
    }
    names.push_back(std::move(name));
  }
  if (names.size() > kMaxVertices) {
    throw ParseError(ParseErrorKind::Syntax, declared.back().second, "more than 64 vertices");
  }
  auto lookup = [&](const std::string& name, std::size_t line) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError(ParseErrorKind::UnknownEndpoint, line, name);
    return static_cast<VertexId>(it - names.begin());
  };
  std::vector<Edge> edges;
  std::unordered_set<std::size_t> seen;
  for (const auto& e : pending) {
    auto a = lookup(e.a, e.line);
    auto b = lookup(e.b, e.line);
    if (a > b) std::swap(a, b);
    if (!seen.insert(a * kMaxVertices + b).second) {
      throw ParseError(ParseErrorKind::DuplicateEdge, e.line, e.a + "-" + e.b);
    }
    edges.push_back({a, b, e.label});
  }
  return DefiningGraph(std::move(names), edges);
}

}  // namespace

DefiningGraph parse_graph_text(std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> declared;
  std::vector<PendingEdge> pending;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t start = 0;
    while (start <= line.size()) {
      auto semi = line.find(';', start);
      if (semi == std::string_view::npos) semi = line.size();
      const auto stmt = trim(line.substr(start, semi - start));
      start = semi + 1;
      if (stmt.empty()) continue;

      const auto colon = stmt.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(ParseErrorKind::Syntax, line_no,
                         "expected 'vertices:' or 'edge:', got '" + std::string(stmt) + "'");
      }
      const auto keyword = trim(stmt.substr(0, colon));
      const auto body = split_ws(stmt.substr(colon + 1));
      if (keyword == "vertices") {
        for (auto name : body) {
          if (!valid_name(name)) {
            throw ParseError(ParseErrorKind::Syntax, line_no, "bad vertex name '" + std::string(name) + "'");
          }
          declared.emplace_back(std::string(name), line_no);
        }
      } else if (keyword == "edge" || keyword == "edges") {
        if (body.size() == 1 && body[0] == "(none)") continue;
        if (keyword == "edge" && body.size() != 1) {
          throw ParseError(ParseErrorKind::Syntax, line_no, "'edge:' takes exactly one edge");
        }
        for (auto token : body) pending.push_back(parse_edge_token(token, line_no));
      } else {
        throw ParseError(ParseErrorKind::Syntax, line_no, "unknown statement '" + std::string(keyword) + "'");
      }
    }
  }
  return assemble(std::move(declared), pending, line_no);
}

DefiningGraph parse_graph_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::Syntax, 0, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(ParseErrorKind::Syntax, 0, "expected an object with a 'vertices' array");
  }
  std::vector<std::pair<std::string, std::size_t>> declared;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string() || !valid_name(v.get<std::string>())) {
      throw ParseError(ParseErrorKind::Syntax, 0, "bad vertex name " + v.dump());
    }
    declared.emplace_back(v.get<std::string>(), 0);
  }
  std::vector<PendingEdge> pending;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError(ParseErrorKind::Syntax, 0, "'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("m") ||
          !e["a"].is_string() || !e["b"].is_string()) {
        throw ParseError(ParseErrorKind::Syntax, 0, "edge must be {a, b, m}: " + e.dump());
      }
      const auto& m = e["m"];
      int label = 0;
      if (m.is_string()) {
        label = parse_label(m.get<std::string>(), 0);
      } else if (m.is_number_integer()) {
        const auto value = m.get<long long>();
        if (value < 2) throw ParseError(ParseErrorKind::LabelTooSmall, 0, std::to_string(value));
        if (value > 1'000'000'000LL) throw ParseError(ParseErrorKind::NonIntegerLabel, 0, m.dump());
        label = static_cast<int>(value);
      } else {
        throw ParseError(ParseErrorKind::NonIntegerLabel, 0, m.dump());
      }
      auto a = e["a"].get<std::string>();
      auto b = e["b"].get<std::string>();
      if (a == b) throw ParseError(ParseErrorKind::SelfLoop, 0, a);
      pending.push_back({std::move(a), std::move(b), label, 0});
    }
  }
  return assemble(std::move(declared), pending, 0);
}

DefiningGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

std::string emit_graph(const DefiningGraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) {
    nlohmann::ordered_json doc;
    doc["vertices"] = g.names();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
      doc["edges"].push_back({{"a", g.name(e.a)}, {"b", g.name(e.b)}, {"m", e.label}});
    }
    return doc.dump(2) + "\n";
  }
  std::string out = "vertices:";
  for (const auto& name : g.names()) out += " " + name;
  out += "\n";
  for (const auto& e : g.edges()) {
    out += "edge: " + g.name(e.a) + "-" + g.name(e.b) + ":" + std::to_string(e.label) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure

SimpleGraph underlying(const DefiningGraph& g) {
  SimpleGraph out;
  out.adjacency.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) out.adjacency[v] = g.neighbors(v);
  return out;
}

SimpleGraph complement(const DefiningGraph& g) {
  SimpleGraph out;
  out.adjacency.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    out.adjacency[v] = g.all() & ~g.neighbors(v) & ~singleton(v);
  }
  return out;
}

VertexSet link(const DefiningGraph& g, VertexId s) {
  if (s >= g.size()) throw PreconditionError(PreconditionKind::UnknownVertex, std::to_string(s));
  return g.neighbors(s);
}

VertexSet star(const DefiningGraph& g, VertexId s) { return link(g, s) | singleton(s); }

std::vector<VertexSet> components(const SimpleGraph& graph) {
  std::vector<VertexSet> out;
  VertexSet unseen = graph.size() == kMaxVertices ? ~VertexSet{0} : singleton(graph.size()) - 1;
  while (unseen != 0) {
    VertexSet comp = singleton(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (auto v : members(frontier)) next |= graph.adjacency[v];
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

Classification classify(const DefiningGraph& g) {
  Classification out;
  out.is_clique = g.is_clique(g.all());
  for (VertexId s = 0; s < g.size(); ++s) {
    if (star(g, s) == g.all()) {
      out.star_center = s;
      break;
    }
  }
  const auto comps = components(complement(g));
  if (comps.size() > 1) {
    // comps is ordered by least vertex, so the first minimum wins ties.
    const auto smallest = std::min_element(comps.begin(), comps.end(), [](VertexSet x, VertexSet y) {
      return cardinality(x) < cardinality(y);
    });
    out.join_factors = JoinFactors{*smallest, g.all() & ~*smallest};
  }
  return out;
}

namespace {

// Bron-Kerbosch with Tomita pivoting over bitsets.
void bron_kerbosch(const DefiningGraph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  VertexId pivot = 0;
  std::size_t best = 0;
  bool have = false;
  for (auto u : members(p | x)) {
    const auto score = cardinality(p & g.neighbors(u));
    if (!have || score > best) {
      pivot = u;
      best = score;
      have = true;
    }
  }
  for (auto v : members(p & ~g.neighbors(pivot))) {
    bron_kerbosch(g, r | singleton(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~singleton(v);
    x |= singleton(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const DefiningGraph& g) {
  std::vector<VertexSet> out;
  bron_kerbosch(g, 0, g.all(), 0, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Clique> enumerate_cliques(const DefiningGraph& g) {
  const auto maximal = maximal_cliques(g);
  std::unordered_set<VertexSet> seen;
  for (auto top : maximal) {
    // All submasks of top, top itself and 0 included.
    for (VertexSet sub = top;; sub = (sub - 1) & top) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<Clique> out;
  out.reserve(seen.size());
  for (auto c : seen) {
    out.push_back({c, std::binary_search(maximal.begin(), maximal.end(), c, canonical_less)});
  }
  std::sort(out.begin(), out.end(),
            [](const Clique& a, const Clique& b) { return canonical_less(a.members, b.members); });
  return out;
}

VertexSet parse_vertex_list(const DefiningGraph& g, std::string_view list) {
  VertexSet out = 0;
  std::size_t start = 0;
  list = trim(list);
  if (list.empty() || list == "{}") return 0;
  if (list.front() == '{' && list.back() == '}') list = list.substr(1, list.size() - 2);
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    const auto name = trim(list.substr(start, comma - start));
    start = comma + 1;
    if (name.empty()) continue;
    out |= singleton(g.index_of(name));
  }
  return out;
}

}  // namespace artin
