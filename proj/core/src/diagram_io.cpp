#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wiremono/diagram.hpp"

namespace wiremono {

std::string point_name(int p, int n) {
  if (p < 0 || p >= 2 * n) throw std::invalid_argument("point index out of range");
  if (p < n) return std::to_string(p + 1);
  return std::to_string(p - n + 1) + "'";
}

int parse_point_name(std::string_view text, int n) {
  bool primed = false;
  if (!text.empty() && text.back() == '\'') {
    primed = true;
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty point name");
  int value = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("bad point name");
    }
    value = value * 10 + (ch - '0');
  }
  if (value < 1 || value > n) {
    throw std::invalid_argument("point " + std::string(text) + (primed ? "'" : "") +
                                " out of range for n=" + std::to_string(n));
  }
  return primed ? n + value - 1 : value - 1;
}

namespace {

std::string format_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::ostringstream os;
  os << "n=" << n << ' ';
  for (const auto& block : blocks) {
    os << '[';
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) os << ' ';
      os << point_name(block[i], n);
    }
    os << ']';
  }
  return os.str();
}

}  // namespace

std::string format_diagram(const SetPartition& p) { return format_blocks(p.n(), p.blocks()); }

std::string format_diagram(const Matching& a) { return format_diagram(SetPartition::of(a)); }

SetPartition parse_diagram(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos, 2) != "n=") throw std::invalid_argument("diagram must start with n=<rank>");
  pos += 2;
  int n = 0;
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw std::invalid_argument("missing rank after n=");
  }
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    n = n * 10 + (text[pos] - '0');
    ++pos;
  }
  std::vector<std::vector<int>> blocks;
  for (;;) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '[') throw std::invalid_argument("expected '[' in diagram");
    ++pos;
    std::vector<int> block;
    for (;;) {
      skip_ws();
      if (pos == text.size()) throw std::invalid_argument("unterminated block");
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '\'')) {
        ++pos;
      }
      if (pos == start) throw std::invalid_argument("bad character in block");
      block.push_back(parse_point_name(text.substr(start, pos - start), n));
    }
    if (block.empty()) throw std::invalid_argument("empty block in diagram");
    blocks.push_back(std::move(block));
  }
  return SetPartition::from_blocks(n, blocks);
}

Matching parse_matching(std::string_view text) { return parse_diagram(text).to_matching(); }

std::string diagram_to_json(const SetPartition& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n();
  auto& arr = j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& block : p.blocks()) {
    nlohmann::ordered_json b = nlohmann::ordered_json::array();
    for (int q : block) b.push_back(point_name(q, p.n()));
    arr.push_back(std::move(b));
  }
  return j.dump();
}

std::string diagram_to_json(const Matching& a) { return diagram_to_json(SetPartition::of(a)); }

SetPartition diagram_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j.at("blocks")) {
    std::vector<int> block;
    for (const auto& name : b) block.push_back(parse_point_name(name.get<std::string>(), n));
    blocks.push_back(std::move(block));
  }
  return SetPartition::from_blocks(n, blocks);
}

}  // namespace wiremono
