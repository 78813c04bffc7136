#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nbpoly/vertex_set.hpp"

namespace nbpoly {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency sets.
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints are rejected.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  /// Wraps prebuilt adjacency lists; validates symmetry, range and loops.
  static Graph from_adjacency(std::vector<std::vector<int>> adj);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return edge_count_; }
  const VertexSet& neighbors(int v) const;
  int degree(int v) const { return neighbors(v).size(); }
  bool has_edge(int u, int v) const;
  int max_degree() const;

  /// {0, 1, ..., n-1}.
  VertexSet vertices() const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::int64_t edge_count_ = 0;
};

/// Edge uv present in the output iff absent in the input (u != v).
Graph complement(const Graph& g);

/// Intersection of the neighborhoods of all vertices in w.
/// The empty intersection is the full vertex set.
VertexSet common_neighborhood(const Graph& g, const VertexSet& w);

/// Union of the neighborhoods of all vertices in w.
VertexSet neighborhood_union(const Graph& g, const VertexSet& w);

/// Neighbors of the clique c outside c. Throws std::invalid_argument if c
/// is not a clique.
VertexSet periphery(const Graph& g, const VertexSet& c);

/// True iff all pairs in s are adjacent (vacuously true for |s| <= 1).
bool is_clique(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  ///< new index -> original vertex id
};

/// Subgraph induced by vs; vertices are relabeled 0..|vs|-1 in vs order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

}  // namespace nbpoly
