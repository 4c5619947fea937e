#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "midtree/digraph.hpp"

namespace midtree {

/// Shape of the random digraphs used by `fuzz` and the acceptance corpus.
struct GeneratorParams {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  /// Each ordered pair (u, v), u != v, becomes an arc with probability
  /// arc_numerator / arc_denominator.
  std::uint64_t arc_numerator = 2;
  std::uint64_t arc_denominator = 5;
  /// Weights are p/q with p, q uniform in 1..max_weight_part.
  std::uint64_t max_weight_part = 9;
};

/// Deterministic digraph generator. Draws come straight from mt19937_64
/// (reduced modulo the range), so a seed reproduces the same digraphs on
/// every platform. Vertices are named v1..vn.
class DigraphGenerator {
 public:
  explicit DigraphGenerator(std::uint64_t seed, GeneratorParams params = {});

  WeightedDigraph next();

 private:
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  Rational weight();

  std::mt19937_64 engine_;
  GeneratorParams params_;
};

std::vector<WeightedDigraph> random_corpus(std::uint64_t seed, std::size_t count,
                                           GeneratorParams params = {});

}  // namespace midtree
