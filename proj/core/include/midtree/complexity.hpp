#pragma once

#include <stdexcept>
#include <string_view>

#include "midtree/digraph.hpp"
#include "midtree/matrix.hpp"

namespace midtree {

enum class ComplexityKind { EdgeWeighted, VertexWeighted };

std::string_view to_string(ComplexityKind kind);

/// Raised when two independent computation paths disagree. Exact
/// arithmetic means this is always a bug, never rounding.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Delta^edge: diagonal d_i (out-weight sum), (i, j) = -weight(i -> j).
RationalMatrix edge_laplacian(const WeightedDigraph& d);

/// Delta^vertex: diagonal sum of head weights over out-arcs,
/// (u, v) = -weight(v) when u -> v is an arc.
RationalMatrix vertex_laplacian(const WeightedDigraph& d);

RationalMatrix laplacian(const WeightedDigraph& d, ComplexityKind kind);

/// Weighted count of spanning trees rooted at `root`: the principal minor
/// of the Laplacian at the root. A single-vertex digraph gives 1.
Rational kappa_rooted(const WeightedDigraph& d, ComplexityKind kind, std::size_t root);
Rational kappa_rooted(const WeightedDigraph& d, ComplexityKind kind, std::string_view root);

/// Sum of kappa_rooted over all roots, cross-checked against the adjugate
/// trace of the Laplacian. Throws ConsistencyError if they differ and
/// std::invalid_argument for the empty digraph.
Rational kappa_total(const WeightedDigraph& d, ComplexityKind kind);

/// Unweighted number of spanning trees.
Integer tree_count(const WeightedDigraph& d);

}  // namespace midtree
