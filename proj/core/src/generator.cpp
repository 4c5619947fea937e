#include "midtree/generator.hpp"

#include <string>

namespace midtree {

DigraphGenerator::DigraphGenerator(std::uint64_t seed, GeneratorParams params)
    : engine_(seed), params_(params) {}

std::uint64_t DigraphGenerator::uniform(std::uint64_t lo, std::uint64_t hi) {
  return lo + engine_() % (hi - lo + 1);
}

Rational DigraphGenerator::weight() {
  const std::uint64_t p = uniform(1, params_.max_weight_part);
  const std::uint64_t q = uniform(1, params_.max_weight_part);
  Rational w(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  w.canonicalize();
  return w;
}

WeightedDigraph DigraphGenerator::next() {
  WeightedDigraph d;
  const std::size_t n = uniform(params_.min_vertices, params_.max_vertices);
  for (std::size_t i = 1; i <= n; ++i) d.add_vertex("v" + std::to_string(i), weight());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (engine_() % params_.arc_denominator < params_.arc_numerator) d.add_arc(u, v, weight());
    }
  }
  return d;
}

std::vector<WeightedDigraph> random_corpus(std::uint64_t seed, std::size_t count,
                                           GeneratorParams params) {
  DigraphGenerator gen(seed, params);
  std::vector<WeightedDigraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

}  // namespace midtree
