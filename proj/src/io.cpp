#include "bpart/io.hpp"

#include <charconv>

namespace bpart {

std::string to_string(const partition& p) {
  if (p.length() == 0) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.part(i));
  }
  return out;
}

std::string to_string(const shot_vector& s) {
  if (s.length() == 0) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.at(i));
  }
  return out;
}

partition parse_partition(std::string_view text, basis b) {
  if (text.empty()) throw std::invalid_argument("empty partition text");
  std::vector<part_t> parts;
  const char* pos = text.data();
  const char* end = text.data() + text.size();
  while (true) {
    part_t part = 0;
    auto [next, ec] = std::from_chars(pos, end, part);
    if (ec != std::errc() || next == pos)
      throw std::invalid_argument("bad partition text: expected a number");
    parts.push_back(part);
    pos = next;
    if (pos == end) break;
    if (*pos != ',') throw std::invalid_argument("bad partition text: expected ','");
    ++pos;
  }
  return partition(std::move(parts), b);
}

nlohmann::ordered_json hasse_to_json(const hasse_diagram& d) {
  nlohmann::ordered_json doc;
  doc["basis"] = d.base().value();
  doc["n"] = d.n();
  doc["nodes"] = partitions_to_json(d.nodes());
  auto edges = nlohmann::ordered_json::array();
  for (const hasse_edge& e : d.edges())
    edges.push_back(nlohmann::ordered_json::array({e.from, e.to, e.position}));
  doc["edges"] = std::move(edges);
  return doc;
}

std::string hasse_to_dot(const hasse_diagram& d) {
  std::string out = "digraph hasse {\n";
  for (std::size_t i = 0; i < d.nodes().size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + to_string(d.nodes()[i]) + "\"];\n";
  for (const hasse_edge& e : d.edges())
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + std::to_string(e.position) + "\"];\n";
  out += "}\n";
  return out;
}

nlohmann::ordered_json partitions_to_json(const std::vector<partition>& ps) {
  auto arr = nlohmann::ordered_json::array();
  for (const partition& p : ps) arr.push_back(p.parts());
  return arr;
}

nlohmann::ordered_json levels_to_json(basis b,
                                      const std::vector<std::vector<partition>>& levels) {
  nlohmann::ordered_json doc;
  doc["basis"] = b.value();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& level : levels) arr.push_back(partitions_to_json(level));
  doc["levels"] = std::move(arr);
  return doc;
}

std::string tree_to_dot(basis, const std::vector<std::vector<partition>>& levels) {
  std::string out = "digraph tree {\n";
  for (std::size_t d = 0; d < levels.size(); ++d)
    for (std::size_t i = 0; i < levels[d].size(); ++i)
      out += "  n" + std::to_string(d) + "_" + std::to_string(i) + " [label=\"" +
             to_string(levels[d][i]) + "\"];\n";
  for (std::size_t d = 0; d + 1 < levels.size(); ++d) {
    std::size_t child = 0;
    for (std::size_t i = 0; i < levels[d].size(); ++i) {
      const std::size_t sons = leading(levels[d][i]) + 1;
      for (std::size_t j = 0; j < sons; ++j, ++child)
        out += "  n" + std::to_string(d) + "_" + std::to_string(i) + " -> n" +
               std::to_string(d + 1) + "_" + std::to_string(child) +
               " [label=\"" + std::to_string(j) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace bpart
