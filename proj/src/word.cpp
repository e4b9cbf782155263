#include "artin/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace artin {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word power(VertexId gen, int exponent) {
  const auto count = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
  return Word(count, Letter{gen, exponent < 0});
}

Word concat(Word lhs, const Word& rhs) {
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

std::string format_word(const DefiningGraph& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += g.name(w[i].gen);
    const long exponent = w[i].inverse ? -run : run;
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

Word parse_word(const DefiningGraph& g, std::string_view text) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    const auto start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t') ++pos;
    const auto token = text.substr(start, pos - start);
    if (token.empty() || token == "1") continue;
    const auto caret = token.find('^');
    const auto name = token.substr(0, caret);
    int exponent = 1;
    if (caret != std::string_view::npos) {
      const auto digits = token.substr(caret + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("bad exponent in '" + std::string(token) + "'");
      }
    }
    out = concat(std::move(out), power(g.index_of(name), exponent));
  }
  return out;
}

std::string format_vertex(const DefiningGraph& g, const SymbolicVertex& v) {
  std::string clique = g.format_set(v.clique);
  clique = clique.substr(1, clique.size() - 2);
  const std::string coset = "A_{" + clique + "}";
  if (v.word.empty()) return coset;
  return format_word(g, v.word) + " " + coset;
}

}  // namespace artin
