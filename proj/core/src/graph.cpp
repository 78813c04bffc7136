#include "nbpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nbpoly {

namespace {

[[noreturn]] void bad_edge(const std::string& what, int u, int v) {
  throw std::invalid_argument("graph: " + what + " (" + std::to_string(u) + ", " +
                              std::to_string(v) + ")");
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) bad_edge("endpoint out of range", u, v);
    if (u == v) bad_edge("self-loop", u, v);
    lists[static_cast<std::size_t>(u)].push_back(v);
    lists[static_cast<std::size_t>(v)].push_back(u);
  }
  adj_.reserve(lists.size());
  for (auto& l : lists) {
    VertexSet s = VertexSet::from_unsorted(std::move(l));  // collapses duplicates
    edge_count_ += s.size();
    adj_.push_back(std::move(s));
  }
  edge_count_ /= 2;
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adj) {
  const int n = static_cast<int>(adj.size());
  Graph g;
  g.adj_.reserve(adj.size());
  for (int v = 0; v < n; ++v) {
    VertexSet s = VertexSet::from_unsorted(std::move(adj[static_cast<std::size_t>(v)]));
    if (!s.empty() && (s.front() < 0 || s.back() >= n)) bad_edge("endpoint out of range", v, -1);
    if (s.contains(v)) bad_edge("self-loop", v, v);
    g.edge_count_ += s.size();
    g.adj_.push_back(std::move(s));
  }
  for (int v = 0; v < n; ++v)
    for (int u : g.adj_[static_cast<std::size_t>(v)])
      if (!g.adj_[static_cast<std::size_t>(u)].contains(v)) bad_edge("asymmetric adjacency", u, v);
  g.edge_count_ /= 2;
  return g;
}

const VertexSet& Graph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("graph: vertex out of range");
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const { return neighbors(u).contains(v); }

int Graph::max_degree() const {
  int d = 0;
  for (const auto& s : adj_) d = std::max(d, s.size());
  return d;
}

VertexSet Graph::vertices() const {
  std::vector<int> all(static_cast<std::size_t>(vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return VertexSet::from_sorted(std::move(all));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const VertexSet& nb = g.neighbors(v);
    auto it = nb.begin();
    for (int u = 0; u < n; ++u) {
      while (it != nb.end() && *it < u) ++it;
      if (u == v || (it != nb.end() && *it == u)) continue;
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& w) {
  if (!w.empty() && (w.front() < 0 || w.back() >= g.vertex_count()))
    throw std::invalid_argument("common_neighborhood: vertex out of range");
  if (w.empty()) return g.vertices();  // empty intersection convention
  VertexSet acc = g.neighbors(w.front());
  for (int i = 1; i < w.size() && !acc.empty(); ++i) acc = intersect(acc, g.neighbors(w[i]));
  return acc;
}

VertexSet neighborhood_union(const Graph& g, const VertexSet& w) {
  VertexSet acc;
  for (int v : w) acc = unite(acc, g.neighbors(v));
  return acc;
}

VertexSet periphery(const Graph& g, const VertexSet& c) {
  if (!is_clique(g, c)) throw std::invalid_argument("periphery: argument is not a clique");
  return difference(neighborhood_union(g, c), c);
}

bool is_clique(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
    throw std::invalid_argument("is_clique: vertex out of range");
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
  std::vector<int> original(vs.begin(), vs.end());
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < original.size(); ++i)
    local[static_cast<std::size_t>(original[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(original.size());
  for (std::size_t i = 0; i < original.size(); ++i)
    for (int u : g.neighbors(original[i])) {
      int lu = local[static_cast<std::size_t>(u)];
      if (lu >= 0) adj[i].push_back(lu);
    }
  return {Graph::from_adjacency(std::move(adj)), std::move(original)};
}

}  // namespace nbpoly
