#include "midtree/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace midtree {
namespace {

bool is_label_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c == '>' || c == ':' || c == '.' || c == '-';
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Rational parse_weight(std::size_t line, std::string_view token) {
  Rational w;
  try {
    w = parse_rational(token);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "malformed weight '" + std::string(token) + "'");
  }
  if (w <= 0) throw ParseError(line, "weight must be positive, got '" + std::string(token) + "'");
  return w;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}

bool is_valid_label(std::string_view label) {
  return !label.empty() &&
         std::all_of(label.begin(), label.end(), [](unsigned char c) { return is_label_char(c); });
}

std::size_t WeightedDigraph::add_vertex(std::string label, Rational weight) {
  if (!is_valid_label(label)) throw GraphError("invalid vertex label '" + label + "'");
  if (weight <= 0) throw GraphError("vertex '" + label + "' has nonpositive weight");
  if (index_.contains(label)) throw GraphError("duplicate vertex '" + label + "'");
  const std::size_t id = vertices_.size();
  index_.emplace(label, id);
  vertices_.push_back({std::move(label), std::move(weight)});
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

std::size_t WeightedDigraph::add_arc(std::size_t tail, std::size_t head, Rational weight) {
  if (tail >= vertices_.size() || head >= vertices_.size()) {
    throw GraphError("arc endpoint is not a vertex");
  }
  const std::string name = vertices_[tail].label + "->" + vertices_[head].label;
  if (tail == head) throw GraphError("loop arc " + name);
  if (find_arc(tail, head)) throw GraphError("parallel arc " + name);
  if (weight <= 0) throw GraphError("arc " + name + " has nonpositive weight");
  const std::size_t id = arcs_.size();
  arcs_.push_back({tail, head, std::move(weight)});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

std::size_t WeightedDigraph::add_arc(std::string_view tail, std::string_view head, Rational weight) {
  return add_arc(vertex_index(tail), vertex_index(head), std::move(weight));
}

std::optional<std::size_t> WeightedDigraph::find_vertex(std::string_view label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedDigraph::vertex_index(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw std::out_of_range("unknown vertex '" + std::string(label) + "'");
}

std::optional<std::size_t> WeightedDigraph::find_arc(std::size_t tail, std::size_t head) const {
  if (tail >= out_.size()) return std::nullopt;
  for (std::size_t e : out_[tail]) {
    if (arcs_[e].head == head) return e;
  }
  return std::nullopt;
}

std::optional<std::size_t> WeightedDigraph::find_arc(std::string_view tail, std::string_view head) const {
  const auto t = find_vertex(tail);
  const auto h = find_vertex(head);
  if (!t || !h) return std::nullopt;
  return find_arc(*t, *h);
}

std::vector<std::string> WeightedDigraph::vertex_labels() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.label);
  return out;
}

std::string WeightedDigraph::arc_label(std::size_t arc) const {
  const Arc& a = arcs_.at(arc);
  return vertices_[a.tail].label + ">" + vertices_[a.head].label;
}

WeightedDigraph WeightedDigraph::with_unit_weights() const {
  WeightedDigraph out = *this;
  for (auto& v : out.vertices_) v.weight = 1;
  for (auto& a : out.arcs_) a.weight = 1;
  return out;
}

bool WeightedDigraph::is_weakly_connected() const {
  const std::size_t n = vertices_.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    };
    for (std::size_t e : out_[v]) visit(arcs_[e].head);
    for (std::size_t e : in_[v]) visit(arcs_[e].tail);
  }
  return reached == n;
}

DegreeProfile degree_profile(const WeightedDigraph& d) {
  DegreeProfile profile(d.vertex_count());
  for (const Arc& a : d.arcs()) {
    profile[a.tail].out_degree++;
    profile[a.tail].out_weight += a.weight;
    profile[a.head].in_degree++;
  }
  return profile;
}

WeightedDigraph parse_digraph(std::string_view text) {
  WeightedDigraph d;
  std::size_t line_no = 0;
  auto ensure_vertex = [&](std::string_view label) {
    if (auto v = d.find_vertex(label)) return *v;
    if (!is_valid_label(label)) {
      throw ParseError(line_no, "invalid vertex name '" + std::string(label) + "'");
    }
    return d.add_vertex(std::string(label), 1);
  };

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    const std::string_view keyword = tokens.front();
    if (keyword == "vertex") {
      if (tokens.size() < 2 || tokens.size() > 3) {
        throw ParseError(line_no, "expected 'vertex NAME [WEIGHT]'");
      }
      const std::string_view name = tokens[1];
      if (!is_valid_label(name)) throw ParseError(line_no, "invalid vertex name '" + std::string(name) + "'");
      if (d.find_vertex(name)) throw ParseError(line_no, "duplicate vertex '" + std::string(name) + "'");
      Rational w = tokens.size() == 3 ? parse_weight(line_no, tokens[2]) : Rational(1);
      d.add_vertex(std::string(name), std::move(w));
    } else if (keyword == "arc") {
      if (tokens.size() < 3 || tokens.size() > 4) {
        throw ParseError(line_no, "expected 'arc TAIL HEAD [WEIGHT]'");
      }
      Rational w = tokens.size() == 4 ? parse_weight(line_no, tokens[3]) : Rational(1);
      if (tokens[1] == tokens[2]) throw ParseError(line_no, "loop arc at '" + std::string(tokens[1]) + "'");
      const std::size_t tail = ensure_vertex(tokens[1]);
      const std::size_t head = ensure_vertex(tokens[2]);
      if (d.find_arc(tail, head)) {
        throw ParseError(line_no, "parallel arc " + std::string(tokens[1]) + "->" + std::string(tokens[2]));
      }
      d.add_arc(tail, head, std::move(w));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(keyword) + "'");
    }
  }
  return d;
}

std::string serialize_digraph(const WeightedDigraph& d) {
  std::ostringstream out;
  for (const auto& v : d.vertices()) out << "vertex " << v.label << ' ' << to_string(v.weight) << '\n';
  for (const auto& a : d.arcs()) {
    out << "arc " << d.vertex(a.tail).label << ' ' << d.vertex(a.head).label << ' '
        << to_string(a.weight) << '\n';
  }
  return out.str();
}

}  // namespace midtree
