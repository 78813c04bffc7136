#pragma once

#include <cstdint>

#include "nbpoly/graph.hpp"

namespace nbpoly {

enum class BasicFamily { kPath, kCycle, kComplete, kStar };

/// Canonical indexing: path/cycle vertices in order, star center is 0.
/// Requires n >= 1 (cycle: n >= 3).
Graph gen_basic(BasicFamily family, int n);

/// Split graph S_m on 2m vertices: clique c_1..c_m at indices 0..m-1,
/// independent vertices v_1..v_m at indices m..2m-1, and v_i adjacent to
/// every c_j with j != i. Its anchor width is 2^m - 1.
Graph gen_split(int m);

/// Interval graph on 4m+1 vertices whose central maximal clique has size
/// 2m+1 and an anchor family of quadratic size. Vertices are intervals on
/// the path p_{-m}..p_m:
///   indices 0..m:        [-m, i] for i = 0..m        (central clique)
///   indices m+1..2m:     [i, m]  for i = -m+1..0     (central clique)
///   indices 2m+1..3m:    [-m, i] for i = -m..-1      (periphery)
///   indices 3m+1..4m:    [i, m]  for i = 1..m        (periphery)
/// Two vertices are adjacent iff their intervals intersect.
Graph gen_interval_family(int m);

/// Random connected chordal graph, deterministic for a fixed
/// (n, attach_max, seed). Starts from one vertex; vertex i attaches to a
/// uniformly chosen subset (random size in [1, attach_max], clamped to the
/// host size) of a maximal clique drawn uniformly from the current
/// maximal-clique list. attach_max = 1 yields a random tree.
Graph gen_random_chordal(int n, int attach_max, std::uint64_t seed);

}  // namespace nbpoly
