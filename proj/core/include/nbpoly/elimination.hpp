#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "nbpoly/graph.hpp"

namespace nbpoly {

/// A candidate perfect elimination order; order[0] is eliminated first.
struct EliminationOrder {
  std::vector<int> order;
};

/// Certificate of non-chordality: the lex-BFS candidate order together with
/// the first vertex whose later neighborhood is not a clique.
struct NotChordal {
  EliminationOrder candidate;
  int failing_vertex = -1;
};

/// Lexicographic breadth-first search by partition refinement, returned in
/// reverse visit order so the result is a perfect elimination order whenever
/// the graph is chordal. Ties break to the smallest vertex index, or
/// pseudo-randomly when tie_seed is given. Intended for connected graphs;
/// find_peo splits components first.
EliminationOrder lex_bfs(const Graph& g, std::optional<std::uint64_t> tie_seed = {});

/// First vertex (by position in ord) whose later neighbors do not form a
/// clique, or nullopt if ord is a perfect elimination order. Uses the
/// parent check: only the earliest later neighbor's neighborhood needs
/// testing. Throws std::invalid_argument if ord is not a permutation.
std::optional<int> first_peo_violation(const Graph& g, const EliminationOrder& ord);

/// True iff ord is a perfect elimination order of g.
bool is_peo(const Graph& g, const EliminationOrder& ord);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Per-component lex-BFS orders concatenated, validated as a perfect
/// elimination order; NotChordal otherwise.
std::variant<EliminationOrder, NotChordal> find_peo(const Graph& g);

}  // namespace nbpoly
