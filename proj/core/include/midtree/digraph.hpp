#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "midtree/rational.hpp"

namespace midtree {

struct Vertex {
  std::string label;
  Rational weight;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Arc between two vertices, stored by vertex index.
struct Arc {
  std::size_t tail;
  std::size_t head;
  Rational weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Thrown for any structural violation while building a digraph
/// (duplicate vertex, loop, parallel arc, nonpositive weight, bad label).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_digraph; the message starts with "line N:".
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// True when `label` is a nonempty token over [A-Za-z0-9_>:.-].
bool is_valid_label(std::string_view label);

/// Simple weighted digraph with positive exact weights on vertices and arcs.
///
/// Vertex order is insertion order and doubles as the row/column order of
/// every matrix derived from the digraph. Arcs also keep insertion order.
class WeightedDigraph {
 public:
  std::size_t add_vertex(std::string label, Rational weight = 1);
  std::size_t add_arc(std::size_t tail, std::size_t head, Rational weight = 1);
  std::size_t add_arc(std::string_view tail, std::string_view head, Rational weight = 1);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Arc& arc(std::size_t i) const { return arcs_.at(i); }

  /// Indices of arcs leaving / entering vertex `v`, in arc order.
  const std::vector<std::size_t>& out_arcs(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_arcs(std::size_t v) const { return in_.at(v); }

  std::optional<std::size_t> find_vertex(std::string_view label) const;
  std::optional<std::size_t> find_arc(std::size_t tail, std::size_t head) const;
  std::optional<std::size_t> find_arc(std::string_view tail, std::string_view head) const;

  /// Like find_vertex but throws std::out_of_range.
  std::size_t vertex_index(std::string_view label) const;

  std::vector<std::string> vertex_labels() const;
  /// `TAIL>HEAD`, the label an arc receives as a vertex of L(D) or M(D).
  std::string arc_label(std::size_t arc) const;

  /// Copy with every vertex and arc weight replaced by 1.
  WeightedDigraph with_unit_weights() const;

  /// Weak connectivity (arc directions ignored). The empty digraph counts
  /// as connected.
  bool is_weakly_connected() const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct VertexDegrees {
  std::size_t out_degree = 0;
  std::size_t in_degree = 0;
  Rational out_weight;  // sum of weights of arcs leaving the vertex

  friend bool operator==(const VertexDegrees&, const VertexDegrees&) = default;
};

using DegreeProfile = std::vector<VertexDegrees>;

DegreeProfile degree_profile(const WeightedDigraph& d);

/// Reads the line-oriented interchange format:
///
///     # comment
///     vertex NAME [WEIGHT]
///     arc TAIL HEAD [WEIGHT]
///
/// WEIGHT is INT or INT/INT and must be positive; it defaults to 1. An arc
/// may mention undeclared vertices, which are then declared with weight 1.
WeightedDigraph parse_digraph(std::string_view text);

/// Canonical text: every vertex first, then every arc, all weights explicit.
std::string serialize_digraph(const WeightedDigraph& d);

}  // namespace midtree
