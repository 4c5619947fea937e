#include "midtree/identities.hpp"

#include <algorithm>

#include "midtree/complexity.hpp"
#include "midtree/transforms.hpp"

namespace midtree {
namespace {

IdentityReport make_report(const WeightedDigraph& d, std::string name) {
  IdentityReport r;
  r.identity = std::move(name);
  r.vertices = d.vertex_count();
  r.arcs = d.arc_count();
  const DegreeProfile profile = degree_profile(d);
  const auto all = [&](auto pred) { return std::all_of(profile.begin(), profile.end(), pred); };
  r.hypotheses = {
      {"all_out_degrees_positive", all([](const VertexDegrees& v) { return v.out_degree > 0; })},
      {"all_in_degrees_positive", all([](const VertexDegrees& v) { return v.in_degree > 0; })},
      {"weakly_connected", d.is_weakly_connected()},
  };
  return r;
}

std::string arc_name(const WeightedDigraph& d, std::size_t arc) {
  const Arc& a = d.arc(arc);
  return d.vertex(a.tail).label + "->" + d.vertex(a.head).label;
}

std::size_t require_arc(const WeightedDigraph& d, std::string_view tail, std::string_view head) {
  if (auto e = d.find_arc(tail, head)) return *e;
  throw std::out_of_range("no arc " + std::string(tail) + "->" + std::string(head));
}

void require_arc_index(const WeightedDigraph& d, std::size_t arc) {
  if (arc >= d.arc_count()) throw std::out_of_range("arc index out of range");
}

// prod_i (chi_i + d_i)^r_i, optionally lowering the exponent of one vertex.
Rational middle_factor(const WeightedDigraph& d, const DegreeProfile& profile,
                       std::optional<std::size_t> lowered = std::nullopt) {
  Rational product = 1;
  for (std::size_t i = 0; i < d.vertex_count(); ++i) {
    long exponent = static_cast<long>(profile[i].in_degree);
    if (lowered == i) --exponent;
    product *= pow(d.vertex(i).weight + profile[i].out_weight, exponent);
  }
  return product;
}

}  // namespace

ProofMatrices build_proof_matrices(const WeightedDigraph& d) {
  const auto vlabels = d.vertex_labels();
  std::vector<std::string> alabels;
  for (std::size_t e = 0; e < d.arc_count(); ++e) alabels.push_back(d.arc_label(e));
  const DegreeProfile profile = degree_profile(d);

  ProofMatrices pm{RationalMatrix(vlabels),          RationalMatrix(vlabels),
                   RationalMatrix(alabels),          RationalMatrix(alabels),
                   RationalMatrix(vlabels, alabels), RationalMatrix(alabels, vlabels),
                   RationalMatrix(vlabels),          RationalMatrix(alabels)};

  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    pm.f(v, v) = profile[v].out_weight;
    pm.q(v, v) = d.vertex(v).weight;
  }
  for (std::size_t e = 0; e < d.arc_count(); ++e) {
    const Arc& a = d.arc(e);
    pm.w(a.tail, a.head) = a.weight;
    pm.m(a.tail, e) = a.weight;
    pm.l(e, a.head) = 1;
    pm.b(e, e) = d.vertex(a.head).weight;
    pm.f_iota(e, e) = profile[a.head].out_weight;
    for (std::size_t f : d.out_arcs(a.head)) pm.w_iota(e, f) = d.arc(f).weight;
  }
  return pm;
}

RationalMatrix assemble_middle_block(const ProofMatrices& pm) {
  const std::size_t n = pm.f.rows();
  const std::size_t m = pm.b.rows();
  std::vector<std::string> labels = pm.f.row_labels();
  labels.insert(labels.end(), pm.b.row_labels().begin(), pm.b.row_labels().end());
  RationalMatrix out(std::move(labels));

  const RationalMatrix neg_m = -pm.m;
  const RationalMatrix neg_lq = -(pm.l * pm.q);
  const RationalMatrix corner = pm.b + pm.f_iota - pm.w_iota;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = pm.f(i, j);
    for (std::size_t j = 0; j < m; ++j) out(i, n + j) = neg_m(i, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(n + i, j) = neg_lq(i, j);
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = corner(i, j);
  }
  return out;
}

IdentityReport check_block_decomposition(const WeightedDigraph& d) {
  IdentityReport r = make_report(d, "block");
  const ProofMatrices pm = build_proof_matrices(d);
  const RationalMatrix lhs = vertex_laplacian(middle_digraph(d));
  const RationalMatrix rhs = assemble_middle_block(pm);

  const bool w_iota_ok = pm.w_iota == pm.l * pm.m;
  const bool w_ok = pm.w == pm.m * pm.l;
  const bool edge_ok = pm.f - pm.w == edge_laplacian(d);
  const bool block_ok = lhs == rhs;
  r.details = {{"W_iota=LM", w_iota_ok},
               {"W=ML", w_ok},
               {"F-W=edge_laplacian", edge_ok},
               {"vertex_laplacian(M(D))=block", block_ok}};
  r.holds = w_iota_ok && w_ok && edge_ok && block_ok;
  r.lhs = lhs;
  r.rhs = rhs;
  return r;
}

IdentityReport check_eq4(const WeightedDigraph& d) {
  IdentityReport r = make_report(d, "eq4");
  const DegreeProfile profile = degree_profile(d);
  RationalPolynomial rhs = char_poly(edge_laplacian(d));
  for (std::size_t i = 0; i < d.vertex_count(); ++i) {
    const Rational root = d.vertex(i).weight + profile[i].out_weight;
    rhs = rhs * RationalPolynomial::linear_factor(root).pow(static_cast<unsigned>(profile[i].in_degree));
  }
  const RationalPolynomial lhs = char_poly(vertex_laplacian(middle_digraph(d)));
  r.holds = lhs == rhs;
  r.lhs = lhs;
  r.rhs = std::move(rhs);
  return r;
}

IdentityReport check_eq3(const WeightedDigraph& d) {
  IdentityReport r = make_report(d, "eq3");
  const DegreeProfile profile = degree_profile(d);
  const Rational lhs = kappa_total(middle_digraph(d), ComplexityKind::VertexWeighted);
  const Rational rhs = kappa_total(d, ComplexityKind::EdgeWeighted) * middle_factor(d, profile);
  r.holds = lhs == rhs;
  r.lhs = lhs;
  r.rhs = rhs;
  return r;
}

IdentityReport check_eq5(const WeightedDigraph& d, std::optional<std::uint64_t> oracle_limit) {
  IdentityReport r = make_report(d, "eq5");
  const WeightedDigraph unit = d.with_unit_weights();
  const DegreeProfile profile = degree_profile(unit);
  const WeightedDigraph middle = middle_digraph(unit);
  const Integer lhs = tree_count(middle);

  Integer factor = 1;
  for (const auto& v : profile) {
    Integer base = 1 + v.out_degree;
    Integer term;
    mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), v.in_degree);
    factor *= term;
  }
  const Integer rhs = tree_count(unit) * factor;
  r.holds = lhs == rhs;

  if (oracle_limit) {
    try {
      const Rational enumerated = oracle_kappa_total(middle, ComplexityKind::EdgeWeighted, *oracle_limit);
      const bool confirmed = enumerated == Rational(lhs);
      r.details.emplace_back("oracle_confirms_lhs", confirmed);
      r.holds = r.holds && confirmed;
    } catch (const GuardExceeded&) {
      r.note = "oracle enumeration of M(D) skipped: guard exceeded";
    }
  }
  r.lhs = Rational(lhs);
  r.rhs = Rational(rhs);
  return r;
}

IdentityReport check_eq6(const WeightedDigraph& d, std::size_t arc) {
  require_arc_index(d, arc);
  IdentityReport r = make_report(d, "eq6");
  r.arc = arc_name(d, arc);
  const Arc& e = d.arc(arc);
  const DegreeProfile profile = degree_profile(d);

  const Rational lhs =
      kappa_rooted(middle_digraph(d), ComplexityKind::VertexWeighted, d.vertex_count() + arc);
  const Rational rhs = e.weight * kappa_rooted(d, ComplexityKind::EdgeWeighted, e.tail) *
                       middle_factor(d, profile, e.head);
  r.holds = lhs == rhs;
  r.lhs = lhs;
  r.rhs = rhs;
  return r;
}

IdentityReport check_eq6(const WeightedDigraph& d, std::string_view tail, std::string_view head) {
  return check_eq6(d, require_arc(d, tail, head));
}

IdentityReport check_levine1(const WeightedDigraph& d) {
  IdentityReport r = make_report(d, "levine1");
  const DegreeProfile profile = degree_profile(d);
  for (std::size_t i = 0; i < d.vertex_count(); ++i) {
    if (profile[i].in_degree == 0 && profile[i].out_weight == 0) {
      r.applicable = false;
      r.note = "vertex '" + d.vertex(i).label + "' has r = 0 and d = 0, factor 0^-1 is undefined";
      if (d.arc_count() > 0) r.lhs = kappa_total(line_digraph(d), ComplexityKind::VertexWeighted);
      return r;
    }
  }
  Rational factor = 1;
  for (const auto& v : profile) factor *= pow(v.out_weight, static_cast<long>(v.in_degree) - 1);
  const Rational lhs = kappa_total(line_digraph(d), ComplexityKind::VertexWeighted);
  const Rational rhs = kappa_total(d, ComplexityKind::EdgeWeighted) * factor;
  r.holds = lhs == rhs;
  r.lhs = lhs;
  r.rhs = rhs;
  return r;
}

IdentityReport check_levine2(const WeightedDigraph& d, std::size_t arc) {
  require_arc_index(d, arc);
  const DegreeProfile profile = degree_profile(d);
  for (std::size_t i = 0; i < d.vertex_count(); ++i) {
    if (profile[i].in_degree == 0) {
      throw PreconditionError("levine2 requires in-degree >= 1 everywhere; vertex '" +
                              d.vertex(i).label + "' has in-degree 0");
    }
  }
  IdentityReport r = make_report(d, "levine2");
  r.arc = arc_name(d, arc);
  const Arc& e = d.arc(arc);
  const Rational lhs = kappa_rooted(line_digraph(d), ComplexityKind::VertexWeighted, arc);
  r.lhs = lhs;
  if (profile[e.head].in_degree == 1 && profile[e.head].out_weight == 0) {
    r.applicable = false;
    r.note = "vertex '" + d.vertex(e.head).label + "' has r = 1 and d = 0, factor 0^-1 is undefined";
    return r;
  }
  Rational rhs = e.weight * kappa_rooted(d, ComplexityKind::EdgeWeighted, e.tail);
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    const long exponent = static_cast<long>(profile[v].in_degree) - (v == e.head ? 2 : 1);
    rhs *= pow(profile[v].out_weight, exponent);
  }
  r.holds = lhs == rhs;
  r.rhs = rhs;
  return r;
}

IdentityReport check_levine2(const WeightedDigraph& d, std::string_view tail, std::string_view head) {
  return check_levine2(d, require_arc(d, tail, head));
}

IdentityReport check_mtt(const WeightedDigraph& d, std::uint64_t limit) {
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (candidate_space(d, v) > limit) {
      throw GuardExceeded("mtt: candidate space for root '" + d.vertex(v).label +
                          "' exceeds oracle limit " + std::to_string(limit));
    }
  }
  IdentityReport r = make_report(d, "mtt");
  std::vector<Rational> lhs, rhs;
  bool all_equal = true;
  for (ComplexityKind kind : {ComplexityKind::EdgeWeighted, ComplexityKind::VertexWeighted}) {
    bool kind_equal = true;
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
      lhs.push_back(kappa_rooted(d, kind, v));
      rhs.push_back(oracle_kappa_rooted(d, kind, v, limit));
      kind_equal = kind_equal && lhs.back() == rhs.back();
    }
    lhs.push_back(kappa_total(d, kind));
    rhs.push_back(oracle_kappa_total(d, kind, limit));
    kind_equal = kind_equal && lhs.back() == rhs.back();
    r.details.emplace_back(std::string(to_string(kind)), kind_equal);
    all_equal = all_equal && kind_equal;
  }
  r.holds = all_equal;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

std::optional<IdentitySelection> parse_identity_selection(std::string_view name) {
  static constexpr std::pair<std::string_view, IdentitySelection> kNames[] = {
      {"all", IdentitySelection::All},         {"block", IdentitySelection::Block},
      {"eq3", IdentitySelection::Eq3},         {"eq4", IdentitySelection::Eq4},
      {"eq5", IdentitySelection::Eq5},         {"eq6", IdentitySelection::Eq6},
      {"levine1", IdentitySelection::Levine1}, {"levine2", IdentitySelection::Levine2},
      {"mtt", IdentitySelection::Mtt},
  };
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

std::vector<IdentityReport> verify(const WeightedDigraph& d, IdentitySelection selection,
                                   const VerifyOptions& options) {
  const auto wants = [&](IdentitySelection s) {
    return selection == IdentitySelection::All || selection == s;
  };
  std::vector<std::size_t> arcs;
  if (options.arc) {
    require_arc_index(d, *options.arc);
    arcs.push_back(*options.arc);
  } else {
    for (std::size_t e = 0; e < d.arc_count(); ++e) arcs.push_back(e);
  }

  std::vector<IdentityReport> out;
  if (wants(IdentitySelection::Block)) out.push_back(check_block_decomposition(d));
  if (wants(IdentitySelection::Eq4)) out.push_back(check_eq4(d));
  if (wants(IdentitySelection::Eq3)) out.push_back(check_eq3(d));
  if (wants(IdentitySelection::Eq5)) out.push_back(check_eq5(d));
  if (wants(IdentitySelection::Eq6)) {
    for (std::size_t e : arcs) out.push_back(check_eq6(d, e));
  }
  if (wants(IdentitySelection::Levine1)) out.push_back(check_levine1(d));
  if (wants(IdentitySelection::Levine2)) {
    for (std::size_t e : arcs) {
      try {
        out.push_back(check_levine2(d, e));
      } catch (const PreconditionError& err) {
        if (!options.lenient) throw;
        IdentityReport r = make_report(d, "levine2");
        r.arc = arc_name(d, e);
        r.applicable = false;
        r.note = err.what();
        out.push_back(std::move(r));
      }
    }
  }
  if (wants(IdentitySelection::Mtt)) {
    try {
      out.push_back(check_mtt(d, options.oracle_limit));
    } catch (const GuardExceeded& err) {
      if (!options.lenient) throw;
      IdentityReport r = make_report(d, "mtt");
      r.applicable = false;
      r.note = err.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace midtree
