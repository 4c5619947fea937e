#include "midtree/oracle.hpp"

#include <string>

namespace midtree {
namespace {

// Walks each vertex's choice chain with three-color marking.
bool chains_are_acyclic(const std::vector<std::size_t>& parent, std::size_t root,
                        std::vector<unsigned char>& state) {
  enum : unsigned char { kUnseen, kOnPath, kDone };
  std::fill(state.begin(), state.end(), kUnseen);
  state[root] = kDone;
  for (std::size_t start = 0; start < parent.size(); ++start) {
    std::size_t v = start;
    while (state[v] == kUnseen) {
      state[v] = kOnPath;
      v = parent[v];
    }
    if (state[v] == kOnPath) return false;
    for (v = start; state[v] == kOnPath; v = parent[v]) state[v] = kDone;
  }
  return true;
}

// Breadth-first search from the root over reversed choice links.
bool all_reach_root(const std::vector<std::size_t>& parent, std::size_t root,
                    std::vector<std::size_t>& first_child, std::vector<std::size_t>& next_sibling,
                    std::vector<std::size_t>& queue) {
  const std::size_t n = parent.size();
  std::fill(first_child.begin(), first_child.end(), kNoArc);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == root) continue;
    next_sibling[v] = first_child[parent[v]];
    first_child[parent[v]] = v;
  }
  queue.clear();
  queue.push_back(root);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t c = first_child[queue[i]]; c != kNoArc; c = next_sibling[c]) queue.push_back(c);
  }
  return queue.size() == n;
}

}  // namespace

std::uint64_t candidate_space(const WeightedDigraph& d, std::size_t root) {
  std::uint64_t space = 1;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (v == root) continue;
    const std::uint64_t k = d.out_arcs(v).size();
    if (k == 0) return 0;
    if (space > std::numeric_limits<std::uint64_t>::max() / k) {
      space = std::numeric_limits<std::uint64_t>::max();
    } else {
      space *= k;
    }
  }
  return space;
}

bool is_spanning_tree(const WeightedDigraph& d, const SpanningTree& t) {
  const std::size_t n = d.vertex_count();
  if (t.root >= n || t.choice.size() != n || t.choice[t.root] != kNoArc) return false;
  std::vector<std::size_t> parent(n, kNoArc);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == t.root) continue;
    if (t.choice[v] >= d.arc_count() || d.arc(t.choice[v]).tail != v) return false;
    parent[v] = d.arc(t.choice[v]).head;
  }
  // Independent check: following parents from any vertex hits the root
  // within n steps.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t w = v;
    for (std::size_t steps = 0; w != t.root && steps < n; ++steps) w = parent[w];
    if (w != t.root) return false;
  }
  return true;
}

void for_each_spanning_tree(const WeightedDigraph& d, std::size_t root, std::uint64_t limit,
                            const std::function<void(const SpanningTree&)>& visit) {
  const std::size_t n = d.vertex_count();
  if (root >= n) throw std::out_of_range("root index out of range");
  const std::uint64_t space = candidate_space(d, root);
  if (space > limit) {
    throw GuardExceeded("candidate space " + std::to_string(space) + " exceeds oracle limit " +
                        std::to_string(limit));
  }
  if (space == 0) return;

  std::vector<std::size_t> digit(n, 0);
  SpanningTree tree{root, std::vector<std::size_t>(n, kNoArc)};
  std::vector<std::size_t> parent(n, root);
  std::vector<unsigned char> state(n);
  std::vector<std::size_t> first_child(n), next_sibling(n), queue;
  queue.reserve(n);

  for (std::size_t v = 0; v < n; ++v) {
    if (v == root) continue;
    tree.choice[v] = d.out_arcs(v)[0];
    parent[v] = d.arc(tree.choice[v]).head;
  }

  for (;;) {
    const bool acyclic = chains_are_acyclic(parent, root, state);
    const bool rooted = all_reach_root(parent, root, first_child, next_sibling, queue);
    if (acyclic != rooted) throw ConsistencyError("oracle: acyclicity and reachability checks disagree");
    if (acyclic) visit(tree);

    // Odometer step, last vertex fastest.
    std::size_t v = n;
    while (v-- > 0) {
      if (v == root) continue;
      const auto& outs = d.out_arcs(v);
      if (++digit[v] < outs.size()) {
        tree.choice[v] = outs[digit[v]];
        parent[v] = d.arc(tree.choice[v]).head;
        break;
      }
      digit[v] = 0;
      tree.choice[v] = outs[0];
      parent[v] = d.arc(outs[0]).head;
    }
    if (v == static_cast<std::size_t>(-1)) return;
  }
}

std::vector<SpanningTree> enumerate_spanning_trees(const WeightedDigraph& d, std::size_t root,
                                                   std::uint64_t limit) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(d, root, limit, [&](const SpanningTree& t) { out.push_back(t); });
  return out;
}

Rational oracle_kappa_rooted(const WeightedDigraph& d, ComplexityKind kind, std::size_t root,
                             std::uint64_t limit) {
  Rational sum = 0;
  for_each_spanning_tree(d, root, limit, [&](const SpanningTree& t) {
    Rational product = 1;
    for (std::size_t v = 0; v < t.choice.size(); ++v) {
      if (v == t.root) continue;
      const Arc& a = d.arc(t.choice[v]);
      product *= kind == ComplexityKind::EdgeWeighted ? a.weight : d.vertex(a.head).weight;
    }
    sum += product;
  });
  return sum;
}

Rational oracle_kappa_total(const WeightedDigraph& d, ComplexityKind kind, std::uint64_t limit) {
  // Check the guard for every root before doing any work.
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (candidate_space(d, v) > limit) {
      throw GuardExceeded("candidate space for root '" + d.vertex(v).label + "' exceeds oracle limit " +
                          std::to_string(limit));
    }
  }
  Rational sum = 0;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) sum += oracle_kappa_rooted(d, kind, v, limit);
  return sum;
}

}  // namespace midtree
