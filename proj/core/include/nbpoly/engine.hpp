#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "nbpoly/anchor_map.hpp"
#include "nbpoly/elimination.hpp"
#include "nbpoly/graph.hpp"
#include "nbpoly/polynomial.hpp"

namespace nbpoly {

/// One maximal clique of the working graph together with its anchor family.
///
/// Invariants: the clique itself is a key whose polynomial has constant
/// term 1 (the empty periphery set); every key is a non-empty subset of the
/// clique; no stored polynomial is zero, so the map size is the true anchor
/// family size.
struct CliqueRecord {
  VertexSet clique;
  AnchorMap anchors;
};

/// Anchor data of a sub-clique, derived from a record whose clique contains
/// it: keys are the non-empty intersections of the record's anchors with
/// `clique`; each polynomial is (1+x)^{|record.clique \ clique|} times the
/// sum of the record polynomials whose anchor meets `clique` in that key.
/// Throws std::invalid_argument unless clique is a non-empty subset of
/// rec.clique.
AnchorMap restrict_record(const CliqueRecord& rec, const VertexSet& clique);

/// Generating function of the vertex sets having a common neighbor in the
/// clique: sum over anchors A of P(A) * ((1+x)^c - x^|A| (1+x)^(c-|A|))
/// where c is the clique size.
Polynomial local_neighborhood_gf(const AnchorMap& restricted, int clique_size);

/// Increment of the neighborhood polynomial when a new vertex is attached
/// to the clique: x^c if the clique was maximal (its vertex set gains its
/// first common neighbor), plus x times local_neighborhood_gf.
Polynomial attachment_delta(const AnchorMap& restricted, int clique_size,
                            bool clique_was_maximal);

/// Record for the new maximal clique `clique ∪ {v}` after attaching v.
/// The empty periphery set migrates from anchor `clique` to the new full
/// clique: the old polynomial at `clique` loses its unit (dropped if zero)
/// and the new clique gets polynomial 1.
CliqueRecord spawn_record(const AnchorMap& restricted, const VertexSet& clique, int v);

/// Updates a record for a vertex freshly attached to `clique` elsewhere in
/// the graph. With A0 = rec.clique ∩ clique (must be non-empty and a proper
/// subset of rec.clique), every periphery set may gain the new vertex, which
/// cuts its anchor down to an intersection with A0:
///   P'(A) = P(A) + x * sum of P(A') over old anchors A' with A' ∩ A0 = A.
CliqueRecord refresh_record(const CliqueRecord& rec, const VertexSet& clique);

struct StepStats {
  int vertex = -1;          ///< original id of the attached vertex
  int clique_size = 0;      ///< attachment clique size |C|
  int host_size = 0;        ///< size of the maximal clique C was found in
  int records_touched = 0;  ///< records refreshed (spawned record excluded)
  int record_count = 0;     ///< records after the step
  int max_family_size = 0;  ///< largest anchor family after the step
};

struct ComputationResult {
  Polynomial poly;       ///< neighborhood polynomial of the input graph
  int anchor_width = 0;  ///< max final anchor family size over maximal cliques
  int peak_width = 0;    ///< max anchor family size over all steps
  std::vector<StepStats> steps;
};

/// Post-step view for validation hooks; vertices use the engine's internal
/// labels (attachment order within the current component).
struct EngineSnapshot {
  const Graph& graph;
  const std::vector<CliqueRecord>& records;
  const Polynomial& poly;
  int step;
  int vertex;
};

struct ComputeOptions {
  /// Tie-break seed forwarded to lex_bfs; absent means smallest-index ties.
  std::optional<std::uint64_t> tie_seed;
  /// Check record invariants and refresh conservation after every step;
  /// throws std::logic_error on violation.
  bool validate = false;
  /// One line per attachment step.
  std::ostream* trace = nullptr;
  /// Called after every attachment step (and after seeding each component).
  std::function<void(const EngineSnapshot&)> observer;
};

using ComputeOutcome = std::variant<ComputationResult, NotChordal>;

/// Computes the neighborhood polynomial and anchor width of a chordal graph
/// by growing it one vertex at a time along the reverse perfect elimination
/// order of each connected component, maintaining one CliqueRecord per
/// maximal clique. Component polynomials combine additively (disjoint
/// unions share only the empty set).
ComputeOutcome compute(const Graph& g, const ComputeOptions& opts = {});

/// Anchor width of a chordal graph: the largest anchor family size over its
/// maximal cliques, which bounds the family of every clique.
std::variant<int, NotChordal> anchor_width(const Graph& g, const ComputeOptions& opts = {});

}  // namespace nbpoly
