#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "nbpoly/graph.hpp"
#include "nbpoly/random.hpp"

namespace nbpoly::test {

/// Erdős–Rényi-style random graph, deterministic for a fixed seed.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  const std::uint64_t threshold = static_cast<std::uint64_t>(p * 4294967296.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_below(rng, 4294967296ULL) < threshold) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Naive perfect-elimination check straight from the definition: every pair
/// of later neighbors must be adjacent. Cubic; test oracle only.
inline bool naive_is_peo(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    std::vector<int> later;
    for (int u : g.neighbors(v))
      if (pos[static_cast<std::size_t>(u)] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

/// Brute-force chordality: no vertex subset of size >= 4 induces a cycle.
/// Only for small n.
inline bool brute_is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    if (std::popcount(sub) < 4) continue;
    // induced subgraph is a cycle iff connected and every degree is 2
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (sub & (1u << v)) members.push_back(v);
    bool all_two = true;
    for (int v : members) {
      int d = 0;
      for (int u : members)
        if (u != v && g.has_edge(u, v)) ++d;
      if (d != 2) {
        all_two = false;
        break;
      }
    }
    if (!all_two) continue;
    std::vector<int> stack = {members[0]};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(members[0])] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : members)
        if (!seen[static_cast<std::size_t>(u)] && g.has_edge(u, v)) {
          seen[static_cast<std::size_t>(u)] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached == members.size()) return false;  // induced cycle of length >= 4
  }
  return true;
}

/// All maximal cliques by subset enumeration; only for small n.
inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (sub & (1u << v)) members.push_back(v);
    bool ok = true;
    for (std::size_t a = 0; a < members.size() && ok; ++a)
      for (std::size_t b = a + 1; b < members.size() && ok; ++b)
        if (!g.has_edge(members[a], members[b])) ok = false;
    if (ok) cliques.push_back(sub);
  }
  std::vector<VertexSet> out;
  for (std::uint32_t c : cliques) {
    bool maximal = true;
    for (std::uint32_t d : cliques)
      if (d != c && (c & ~d) == 0) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (c & (1u << v)) members.push_back(v);
    out.push_back(VertexSet::from_sorted(std::move(members)));
  }
  return out;
}

}  // namespace nbpoly::test
