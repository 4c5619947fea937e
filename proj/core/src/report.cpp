#include <sstream>

#include <json.hpp>

#include "midtree/identities.hpp"

namespace midtree {
namespace {

using nlohmann::json;

struct TextValue {
  std::string operator()(std::monostate) const { return "undefined"; }
  std::string operator()(const Rational& r) const { return to_string(r); }
  std::string operator()(const RationalPolynomial& p) const { return "[" + to_string(p) + "]"; }
  std::string operator()(const std::vector<Rational>& v) const {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
    return out + ")";
  }
  std::string operator()(const RationalMatrix& m) const {
    std::string out = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out += "\n    [";
      for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + to_string(m(i, j));
      out += "]";
    }
    return out;
  }
};

struct JsonValue {
  json operator()(std::monostate) const { return nullptr; }
  json operator()(const Rational& r) const { return to_string(r); }
  json operator()(const RationalPolynomial& p) const {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
  }
  json operator()(const std::vector<Rational>& v) const {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(to_string(c));
    return arr;
  }
  json operator()(const RationalMatrix& m) const {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  }
};

std::string flags(const std::vector<std::pair<std::string, bool>>& items) {
  std::string out;
  for (const auto& [name, value] : items) {
    if (!out.empty()) out += ' ';
    out += name + '=' + (value ? "yes" : "no");
  }
  return out;
}

}  // namespace

std::string render_text(const IdentityReport& r) {
  std::ostringstream out;
  out << r.identity;
  if (r.arc) out << " [e*=" << *r.arc << "]";
  out << ": " << (!r.applicable ? "NOT-APPLICABLE" : r.holds ? "HOLDS" : "FAILS") << '\n';
  out << "  lhs: " << std::visit(TextValue{}, r.lhs) << '\n';
  out << "  rhs: " << std::visit(TextValue{}, r.rhs) << '\n';
  if (!r.details.empty()) out << "  checks: " << flags(r.details) << '\n';
  out << "  hypotheses: " << flags(r.hypotheses) << '\n';
  out << "  digraph: n=" << r.vertices << " m=" << r.arcs << '\n';
  if (!r.note.empty()) out << "  note: " << r.note << '\n';
  return out.str();
}

std::string render_text(const std::vector<IdentityReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += render_text(r);
  return out;
}

std::string render_json(const std::vector<IdentityReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json hyp = json::object();
    for (const auto& [k, v] : r.hypotheses) hyp[k] = v;
    json details = json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    arr.push_back({
        {"identity", r.identity},
        {"holds", r.holds},
        {"applicable", r.applicable},
        {"lhs", std::visit(JsonValue{}, r.lhs)},
        {"rhs", std::visit(JsonValue{}, r.rhs)},
        {"hypotheses", std::move(hyp)},
        {"digraph_summary", {{"vertices", r.vertices}, {"arcs", r.arcs}}},
        {"arc", r.arc ? json(*r.arc) : json(nullptr)},
        {"details", std::move(details)},
        {"note", r.note},
    });
  }
  return arr.dump(2) + "\n";
}

}  // namespace midtree
