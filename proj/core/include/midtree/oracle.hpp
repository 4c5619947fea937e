#pragma once

// Brute-force spanning tree enumeration. Deliberately shares nothing with
// the determinant path so the two can be checked against each other.

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "midtree/complexity.hpp"
#include "midtree/digraph.hpp"

namespace midtree {

inline constexpr std::uint64_t kDefaultOracleLimit = 1'000'000;
inline constexpr std::size_t kNoArc = std::numeric_limits<std::size_t>::max();

/// Thrown when the candidate space is larger than the caller's limit. The
/// oracle refuses instead of returning a partial answer.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// In-tree converging to `root`: choice[v] is the arc index v leaves by,
/// and choice[root] == kNoArc.
struct SpanningTree {
  std::size_t root = 0;
  std::vector<std::size_t> choice;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// Number of candidate functions (product of out-degrees over non-root
/// vertices), saturated at UINT64_MAX.
std::uint64_t candidate_space(const WeightedDigraph& d, std::size_t root);

/// True when `t` is a spanning tree of `d`: root has no chosen arc, every
/// other vertex picks one of its own out-arcs, and there are no cycles.
bool is_spanning_tree(const WeightedDigraph& d, const SpanningTree& t);

/// Calls `visit` for every spanning tree rooted at `root`, in lexicographic
/// order of the per-vertex choice indices (vertex 0 most significant,
/// choices in arc order). Throws GuardExceeded before visiting anything if
/// candidate_space > limit.
void for_each_spanning_tree(const WeightedDigraph& d, std::size_t root, std::uint64_t limit,
                            const std::function<void(const SpanningTree&)>& visit);

std::vector<SpanningTree> enumerate_spanning_trees(const WeightedDigraph& d, std::size_t root,
                                                   std::uint64_t limit = kDefaultOracleLimit);

/// Explicit sum over trees of the product of arc weights (edge kind) or
/// head-vertex weights (vertex kind).
Rational oracle_kappa_rooted(const WeightedDigraph& d, ComplexityKind kind, std::size_t root,
                             std::uint64_t limit = kDefaultOracleLimit);

Rational oracle_kappa_total(const WeightedDigraph& d, ComplexityKind kind,
                            std::uint64_t limit = kDefaultOracleLimit);

}  // namespace midtree
