#pragma once

#include <stdexcept>
#include <vector>

#include "nbpoly/anchor_map.hpp"
#include "nbpoly/elimination.hpp"
#include "nbpoly/graph.hpp"
#include "nbpoly/polynomial.hpp"

namespace nbpoly {

/// Refusal to run an exponential enumeration past its configured limit.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kOracleSubsetLimit = 22;
inline constexpr int kOraclePeripheryLimit = 20;
inline constexpr int kOracleAttachLimit = 20;

/// Generating function of all vertex subsets that have a common neighbor,
/// by enumeration of all 2^n subsets.
Polynomial brute_neighborhood_poly(const Graph& g, int limit = kOracleSubsetLimit);

/// Number of vertex subsets that have a common neighbor.
std::uint64_t brute_neighborhood_count(const Graph& g, int limit = kOracleSubsetLimit);

/// Generating function of all dominating sets (D together with its
/// neighborhoods covers every vertex), by enumeration.
Polynomial brute_domination_poly(const Graph& g, int limit = kOracleSubsetLimit);

/// True iff the domination polynomial of the complement plus the
/// neighborhood polynomial equals (1+x)^n: every vertex set either has a
/// common neighbor or dominates the complement.
bool check_complement_identity(const Graph& g, int limit = kOracleSubsetLimit);

/// Anchor family of a clique with exact periphery polynomials, by
/// enumerating every subset of the periphery and grouping by its common
/// neighborhood inside the clique. The empty periphery set contributes the
/// unit at the clique itself.
AnchorMap brute_anchor_data(const Graph& g, const VertexSet& clique,
                            int periphery_limit = kOraclePeripheryLimit);

/// Anchor family of a clique without polynomials: the smallest family that
/// contains the clique and is closed under intersecting with a periphery
/// vertex's neighborhood (keeping non-empty results). Polynomial in the
/// output size, so it handles exponentially large families that
/// brute_anchor_data cannot.
std::vector<VertexSet> closure_anchor_family(const Graph& g, const VertexSet& clique);

/// Neighborhood polynomial after attaching a new vertex to the subset u of
/// g, by inclusion-exclusion over the non-empty subsets W of u:
///   N + sum of x^|W| for W with empty common neighborhood
///     + sum of (-1)^(|W|+1) x (1+x)^|common neighborhood of W|.
/// n_g must be the neighborhood polynomial of g. Works for any u, clique
/// or not; exponential in |u|.
Polynomial general_attachment(const Graph& g, const Polynomial& n_g, const VertexSet& u,
                              int limit = kOracleAttachLimit);

/// Rebuilds the graph one vertex at a time along the reverse of the given
/// elimination order, updating the polynomial with general_attachment at
/// every step. A full second pipeline for cross-checking.
Polynomial replay_attachment(const Graph& g, const EliminationOrder& order,
                             int limit = kOracleAttachLimit);

enum class CographOp { kUnion, kJoin };

/// Neighborhood polynomial of the disjoint union or join of two graphs with
/// polynomials p1, p2 on n1, n2 vertices:
///   union: p1 + p2 - 1
///   join:  (1+x)^n2 p1 + (1+x)^n1 p2 - p1 p2
Polynomial cograph_combine(CographOp op, const Polynomial& p1, const Polynomial& p2, int n1,
                           int n2);

}  // namespace nbpoly
