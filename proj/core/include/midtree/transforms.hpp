#pragma once

#include "midtree/digraph.hpp"

namespace midtree {

/// Vertex-weighted line digraph L(D).
///
/// One vertex per arc of D, labeled `TAIL>HEAD` and weighted by the arc's
/// weight, in arc order. An arc e -> f for every pair with head(e) == tail(f),
/// ordered by (e, f). All new arc weights are 1.
WeightedDigraph line_digraph(const WeightedDigraph& d);

/// Vertex-weighted middle digraph M(D).
///
/// Vertices: V(D) with their weights, then one `TAIL>HEAD` vertex per arc
/// weighted by the arc. Arcs: for each arc e = (u, v), the pair u -> e and
/// e -> v; then e -> f for every pair with head(e) == tail(f), ordered by
/// (e, f). All new arc weights are 1.
///
/// Throws GraphError if a derived label collides with an existing one,
/// which can only happen when user labels already contain '>'.
WeightedDigraph middle_digraph(const WeightedDigraph& d);

}  // namespace midtree
