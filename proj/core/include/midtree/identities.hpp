#pragma once

// Exact checkers for the enumeration identities that tie the complexity of
// a digraph to that of its middle and line digraphs. Every checker
// materializes both sides; nothing short-circuits.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "midtree/digraph.hpp"
#include "midtree/matrix.hpp"
#include "midtree/oracle.hpp"
#include "midtree/polynomial.hpp"

namespace midtree {

/// An identity's stated hypothesis does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// std::monostate marks a side that is undefined (not-applicable reports).
using ReportValue =
    std::variant<std::monostate, Rational, RationalPolynomial, RationalMatrix, std::vector<Rational>>;

struct IdentityReport {
  std::string identity;
  bool applicable = true;
  bool holds = false;
  ReportValue lhs;
  ReportValue rhs;
  /// `TAIL->HEAD` of the fixed arc for eq6 / levine2.
  std::optional<std::string> arc;
  /// Always: all_out_degrees_positive, all_in_degrees_positive,
  /// weakly_connected.
  std::vector<std::pair<std::string, bool>> hypotheses;
  /// Named sub-checks that feed into `holds`.
  std::vector<std::pair<std::string, bool>> details;
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  /// Why the report is not applicable, or empty.
  std::string note;

  /// Passes unless the identity was checked and failed; with `strict`,
  /// not-applicable also counts as a failure.
  bool passes(bool strict = false) const { return applicable ? holds : !strict; }
};

/// The eight matrices of the block decomposition of Delta^vertex(M(D)).
/// n x n: W (weighted adjacency), F (diag out-weight), Q (diag vertex weight).
/// m x m: W_iota (c_ef = weight(f) when head(e) = tail(f)), F_iota
/// (diag out-weight of head(e)), B (diag weight of head(e)).
/// n x m: M (weight(e) at (tail(e), e)). m x n: L (1 at (e, head(e))).
struct ProofMatrices {
  RationalMatrix w, f, w_iota, f_iota, m, l, q, b;
};

ProofMatrices build_proof_matrices(const WeightedDigraph& d);

/// [[F, -M], [-LQ, B + F_iota - W_iota]] in middle-digraph vertex order.
RationalMatrix assemble_middle_block(const ProofMatrices& pm);

/// W_iota = LM, W = ML, and Delta^vertex(M(D)) equals the assembled block.
IdentityReport check_block_decomposition(const WeightedDigraph& d);

/// char_poly(Delta^vertex(M(D))) = char_poly(Delta^edge(D)) * prod_i (lambda - chi_i - d_i)^r_i.
IdentityReport check_eq4(const WeightedDigraph& d);

/// kappa^vertex(M(D)) = kappa^edge(D) * prod_i (chi_i + d_i)^r_i.
IdentityReport check_eq3(const WeightedDigraph& d);

/// t(M(D)) = t(D) * prod_i (1 + d+(v_i))^r_i on unit weights. With an
/// oracle limit, t(M(D)) is also enumerated directly when the guard allows,
/// recorded as the `oracle_confirms_lhs` detail.
IdentityReport check_eq5(const WeightedDigraph& d,
                         std::optional<std::uint64_t> oracle_limit = std::nullopt);

/// Rooted middle-digraph identity at the arc-vertex of e* = (w*, v*):
/// kappa^vertex(M(D), e*) =
///     chi_e* kappa^edge(D, w*) (chi_v* + d_v*)^(r_v* - 1) prod_{v != v*} (chi_v + d_v)^r_v.
IdentityReport check_eq6(const WeightedDigraph& d, std::size_t arc);
IdentityReport check_eq6(const WeightedDigraph& d, std::string_view tail, std::string_view head);

/// kappa^vertex(L(D)) = kappa^edge(D) prod_i d_i^(r_i - 1). Not applicable
/// when a vertex has r_i = 0 and d_i = 0. Uses 0^0 = 1.
IdentityReport check_levine1(const WeightedDigraph& d);

/// kappa^vertex(L(D), e*) = chi_e* kappa^edge(D, w*) d_v*^(r_v* - 2) prod_{v != v*} d_v^(r_v - 1).
/// Throws PreconditionError when some vertex has in-degree 0; not
/// applicable when r_v* = 1 and d_v* = 0.
IdentityReport check_levine2(const WeightedDigraph& d, std::size_t arc);
IdentityReport check_levine2(const WeightedDigraph& d, std::string_view tail, std::string_view head);

/// Matrix-tree results against brute-force enumeration for every root and
/// both kinds, plus both totals. Throws GuardExceeded past `limit`.
IdentityReport check_mtt(const WeightedDigraph& d, std::uint64_t limit = kDefaultOracleLimit);

enum class IdentitySelection { All, Block, Eq3, Eq4, Eq5, Eq6, Levine1, Levine2, Mtt };

/// Parses "all", "block", "eq3", ... ; std::nullopt for anything else.
std::optional<IdentitySelection> parse_identity_selection(std::string_view name);

struct VerifyOptions {
  /// Fixed arc for eq6 / levine2; every arc in order when absent.
  std::optional<std::size_t> arc;
  std::uint64_t oracle_limit = kDefaultOracleLimit;
  /// Turn levine2 precondition failures and oracle guard refusals into
  /// not-applicable reports instead of exceptions. Used for `all`.
  bool lenient = false;
};

/// Runs the selected checkers in a fixed order: block, eq4, eq3, eq5, eq6,
/// levine1, levine2, mtt.
std::vector<IdentityReport> verify(const WeightedDigraph& d, IdentitySelection selection,
                                   const VerifyOptions& options = {});

std::string render_text(const IdentityReport& report);
std::string render_text(const std::vector<IdentityReport>& reports);
/// JSON array of objects with identity, holds, applicable, lhs, rhs,
/// hypotheses, digraph_summary (plus arc, details, note). Rationals are
/// "p/q" strings, polynomials ascending arrays of such strings, matrices
/// arrays of rows.
std::string render_json(const std::vector<IdentityReport>& reports);

}  // namespace midtree
