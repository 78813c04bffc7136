#pragma once

#include <map>

#include "nbpoly/polynomial.hpp"
#include "nbpoly/vertex_set.hpp"

namespace nbpoly {

/// Anchor family of a clique: each anchor set (a non-empty sub-clique that
/// occurs as the common neighborhood of some periphery set) mapped to its
/// periphery polynomial, the generating function of the periphery sets whose
/// common neighborhood inside the clique is exactly that anchor. Ordered by
/// VertexSetOrder so iteration is deterministic.
using AnchorMap = std::map<VertexSet, Polynomial, VertexSetOrder>;

}  // namespace nbpoly
