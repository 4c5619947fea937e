#include "midtree/complexity.hpp"

namespace midtree {

std::string_view to_string(ComplexityKind kind) {
  return kind == ComplexityKind::EdgeWeighted ? "edge" : "vertex";
}

RationalMatrix edge_laplacian(const WeightedDigraph& d) {
  RationalMatrix lap(d.vertex_labels());
  for (const Arc& a : d.arcs()) {
    lap(a.tail, a.tail) += a.weight;
    lap(a.tail, a.head) = -a.weight;
  }
  return lap;
}

RationalMatrix vertex_laplacian(const WeightedDigraph& d) {
  RationalMatrix lap(d.vertex_labels());
  for (const Arc& a : d.arcs()) {
    const Rational& w = d.vertex(a.head).weight;
    lap(a.tail, a.tail) += w;
    lap(a.tail, a.head) = -w;
  }
  return lap;
}

RationalMatrix laplacian(const WeightedDigraph& d, ComplexityKind kind) {
  return kind == ComplexityKind::EdgeWeighted ? edge_laplacian(d) : vertex_laplacian(d);
}

Rational kappa_rooted(const WeightedDigraph& d, ComplexityKind kind, std::size_t root) {
  if (root >= d.vertex_count()) throw std::out_of_range("root index out of range");
  return determinant(delete_row_col(laplacian(d, kind), root));
}

Rational kappa_rooted(const WeightedDigraph& d, ComplexityKind kind, std::string_view root) {
  return kappa_rooted(d, kind, d.vertex_index(root));
}

Rational kappa_total(const WeightedDigraph& d, ComplexityKind kind) {
  if (d.vertex_count() == 0) throw std::invalid_argument("complexity of the empty digraph");
  const RationalMatrix lap = laplacian(d, kind);
  Rational root_sum = 0;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) root_sum += determinant(delete_row_col(lap, v));
  const Rational via_adjugate = adjugate_trace(lap);
  if (root_sum != via_adjugate) {
    throw ConsistencyError("kappa_total: root sum " + to_string(root_sum) +
                           " differs from adjugate trace " + to_string(via_adjugate));
  }
  return root_sum;
}

Integer tree_count(const WeightedDigraph& d) {
  const Rational total = kappa_total(d.with_unit_weights(), ComplexityKind::EdgeWeighted);
  if (total.get_den() != 1) throw ConsistencyError("tree count is not an integer");
  return total.get_num();
}

}  // namespace midtree
