#include "midtree/transforms.hpp"

namespace midtree {
namespace {

// Adds one vertex per arc of `d` to `out` and returns the index of the
// first one; arc e of d becomes vertex first + e.
std::size_t add_arc_vertices(const WeightedDigraph& d, WeightedDigraph& out) {
  const std::size_t first = out.vertex_count();
  for (std::size_t e = 0; e < d.arc_count(); ++e) {
    const std::string label = d.arc_label(e);
    if (out.find_vertex(label)) {
      throw GraphError("derived label '" + label + "' collides with an existing vertex");
    }
    out.add_vertex(label, d.arc(e).weight);
  }
  return first;
}

void add_composable_pairs(const WeightedDigraph& d, WeightedDigraph& out, std::size_t first) {
  for (std::size_t e = 0; e < d.arc_count(); ++e) {
    for (std::size_t f : d.out_arcs(d.arc(e).head)) out.add_arc(first + e, first + f, 1);
  }
}

}  // namespace

WeightedDigraph line_digraph(const WeightedDigraph& d) {
  WeightedDigraph out;
  const std::size_t first = add_arc_vertices(d, out);
  add_composable_pairs(d, out, first);
  return out;
}

WeightedDigraph middle_digraph(const WeightedDigraph& d) {
  WeightedDigraph out;
  for (const auto& v : d.vertices()) out.add_vertex(v.label, v.weight);
  const std::size_t first = add_arc_vertices(d, out);
  for (std::size_t e = 0; e < d.arc_count(); ++e) {
    out.add_arc(d.arc(e).tail, first + e, 1);
    out.add_arc(first + e, d.arc(e).head, 1);
  }
  add_composable_pairs(d, out, first);
  return out;
}

}  // namespace midtree
