#include "nbpoly/edge_list.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <vector>

namespace nbpoly {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on spaces/tabs; fails on anything that is not an unsigned decimal.
bool split_numbers(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    long long value = 0;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
      char ch = line[j];
      if (ch < '0' || ch > '9') return false;
      if (value > (1LL << 40)) return false;  // absurd index, avoid overflow
      value = value * 10 + (ch - '0');
      ++j;
    }
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::vector<long long> nums;
  int line_no = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!split_numbers(body, nums))
      throw EdgeListError(line_no, "expected numeric fields, got '" + std::string(body) + "'");
    if (n < 0) {
      if (nums.size() != 1) throw EdgeListError(line_no, "expected a single vertex count");
      n = nums[0];
      continue;
    }
    if (nums.size() != 2) throw EdgeListError(line_no, "expected 'u v'");
    long long u = nums[0], v = nums[1];
    if (u >= n || v >= n)
      throw EdgeListError(line_no, "vertex index " + std::to_string(std::max(u, v)) +
                                       " out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw EdgeListError(line_no, "self-loop " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw EdgeListError(line_no, "missing vertex count");
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace nbpoly
