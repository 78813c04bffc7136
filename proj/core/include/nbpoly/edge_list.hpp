#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nbpoly/graph.hpp"

namespace nbpoly {

/// Parse failure; what() names the 1-based line number.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the edge-list format: optional `#` comment lines, first data line
/// is the vertex count, each following data line is `u v`. Duplicate edges
/// collapse; self-loops and out-of-range endpoints are errors.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Emits the same format: vertex count, then `u v` lines with u < v in
/// ascending order. Output is deterministic for a given graph.
std::string format_edge_list(const Graph& g);

}  // namespace nbpoly
