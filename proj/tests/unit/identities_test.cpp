#include <gtest/gtest.h>

#include <json.hpp>

#include "midtree/complexity.hpp"
#include "midtree/generator.hpp"
#include "midtree/identities.hpp"
#include "test_support.hpp"

namespace midtree {
namespace {

using testing::q;

Rational lhs_rational(const IdentityReport& r) { return std::get<Rational>(r.lhs); }
Rational rhs_rational(const IdentityReport& r) { return std::get<Rational>(r.rhs); }

bool hypothesis(const IdentityReport& r, std::string_view name) {
  for (const auto& [k, v] : r.hypotheses) {
    if (k == name) return v;
  }
  ADD_FAILURE() << "missing hypothesis " << name;
  return false;
}

TEST(ProofMatrices, SingleArc) {
  const ProofMatrices pm = build_proof_matrices(testing::single_arc(1, 1, q(5, 2)));
  EXPECT_EQ(pm.w, RationalMatrix::from_rows({{q(0), q(5, 2)}, {q(0), q(0)}}));
  EXPECT_EQ(pm.f, RationalMatrix::from_rows({{q(5, 2), q(0)}, {q(0), q(0)}}));
  EXPECT_EQ(pm.m.at("u", "u>v"), q(5, 2));
  EXPECT_EQ(pm.m.at("v", "u>v"), q(0));
  EXPECT_EQ(pm.l.at("u>v", "v"), q(1));
  EXPECT_EQ(pm.l.at("u>v", "u"), q(0));
}

TEST(ProofMatrices, ShapesAndInvariants) {
  DigraphGenerator gen(17);
  for (int i = 0; i < 100; ++i) {
    const WeightedDigraph d = gen.next();
    const ProofMatrices pm = build_proof_matrices(d);
    const std::size_t n = d.vertex_count(), m = d.arc_count();
    EXPECT_EQ(pm.f - pm.w, edge_laplacian(d));
    EXPECT_TRUE(pm.f.is_diagonal() && pm.q.is_diagonal() && pm.b.is_diagonal() && pm.f_iota.is_diagonal());
    EXPECT_EQ(pm.m.rows(), n);
    EXPECT_EQ(pm.m.cols(), m);
    EXPECT_EQ(pm.l.rows(), m);
    EXPECT_EQ(pm.l.cols(), n);
    for (std::size_t e = 0; e < m; ++e) {
      Rational row_sum = 0;
      for (std::size_t v = 0; v < n; ++v) {
        row_sum += pm.l(e, v);
        EXPECT_EQ(pm.m(v, e) != 0, v == d.arc(e).tail);
      }
      EXPECT_EQ(row_sum, 1);
    }
  }
}

TEST(ProofMatrices, BidirectedPairLineAdjacency) {
  const ProofMatrices pm = build_proof_matrices(testing::bidirected_pair());
  EXPECT_EQ(pm.w_iota, RationalMatrix::from_rows({{q(0), q(1)}, {q(1), q(0)}}));
  EXPECT_EQ(pm.w_iota, pm.l * pm.m);
}

TEST(BlockDecomposition, SingleArcAssembly) {
  const IdentityReport r = check_block_decomposition(testing::single_arc());
  EXPECT_TRUE(r.holds);
  // Middle-digraph order u, v, u>v.
  EXPECT_EQ(std::get<RationalMatrix>(r.rhs),
            RationalMatrix::from_rows({{q(1), q(0), q(-1)}, {q(0), q(0), q(0)}, {q(0), q(-1), q(1)}}));
  EXPECT_TRUE(check_block_decomposition(testing::directed_cycle3()).holds);
}

TEST(Eq4, Examples) {
  const IdentityReport arc = check_eq4(testing::single_arc());
  EXPECT_TRUE(arc.holds);
  EXPECT_EQ(std::get<RationalPolynomial>(arc.lhs), RationalPolynomial({q(0), q(1), q(-2), q(1)}));

  const IdentityReport iso = check_eq4(testing::isolated_vertex());
  EXPECT_TRUE(iso.holds);
  EXPECT_EQ(std::get<RationalPolynomial>(iso.lhs), RationalPolynomial({q(0), q(1)}));

  const IdentityReport pair = check_eq4(testing::bidirected_pair());
  EXPECT_TRUE(pair.holds);
  EXPECT_EQ(std::get<RationalPolynomial>(pair.lhs).degree(), 4);
}

TEST(Eq3, Examples) {
  const IdentityReport arc = check_eq3(testing::single_arc(q(1), q(3), q(2)));
  EXPECT_TRUE(arc.holds);
  EXPECT_EQ(lhs_rational(arc), q(6));

  const IdentityReport iso = check_eq3(testing::isolated_vertex());
  EXPECT_TRUE(iso.holds);
  EXPECT_EQ(lhs_rational(iso), q(1));

  const IdentityReport k3 = check_eq3(testing::bidirected_clique3());
  EXPECT_TRUE(k3.holds);
  EXPECT_EQ(lhs_rational(k3), q(6561));
}

TEST(Eq5, ExamplesWithOracleConfirmation) {
  struct Case {
    WeightedDigraph d;
    long expected;
  };
  const Case cases[] = {{testing::directed_cycle3(), 24}, {testing::bidirected_pair(), 8}, {testing::single_arc(), 1}};
  for (const auto& c : cases) {
    const IdentityReport r = check_eq5(c.d, kDefaultOracleLimit);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(lhs_rational(r), q(c.expected));
    ASSERT_EQ(r.details.size(), 1U);
    EXPECT_EQ(r.details[0], (std::pair<std::string, bool>{"oracle_confirms_lhs", true}));
  }
}

TEST(Eq5, IgnoresWeights) {
  const WeightedDigraph d = parse_digraph("vertex u 7/3\narc u v 5\narc v u 1/9");
  const IdentityReport r = check_eq5(d);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(lhs_rational(r), q(8));
}

TEST(Eq6, Examples) {
  const IdentityReport arc = check_eq6(testing::single_arc(), "u", "v");
  EXPECT_TRUE(arc.holds);
  EXPECT_EQ(lhs_rational(arc), q(0));

  const IdentityReport pair = check_eq6(testing::bidirected_pair(), "u", "v");
  EXPECT_TRUE(pair.holds);
  EXPECT_EQ(lhs_rational(pair), q(2));
  EXPECT_EQ(pair.arc, "u->v");

  EXPECT_THROW(check_eq6(testing::single_arc(), "v", "u"), std::out_of_range);
}

TEST(Eq6, HoldsForEveryArcUnderHypothesis) {
  DigraphGenerator gen(31, GeneratorParams{.min_vertices = 2, .max_vertices = 5, .arc_numerator = 3,
                                           .arc_denominator = 5});
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const WeightedDigraph d = gen.next();
    for (std::size_t e = 0; e < d.arc_count(); ++e) {
      const IdentityReport r = check_eq6(d, e);
      if (!hypothesis(r, "all_out_degrees_positive")) continue;
      EXPECT_TRUE(r.holds) << serialize_digraph(d);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Levine1, Examples) {
  const IdentityReport pair = check_levine1(testing::bidirected_pair());
  EXPECT_TRUE(pair.applicable);
  EXPECT_TRUE(pair.holds);
  EXPECT_EQ(lhs_rational(pair), q(2));

  const IdentityReport c3 = check_levine1(testing::directed_cycle3());
  EXPECT_TRUE(c3.holds);
  EXPECT_EQ(lhs_rational(c3), q(3));

  // u: r = 0, d = 1 gives 1^-1; v: r = 1, d = 0 gives 0^0 = 1.
  const IdentityReport arc = check_levine1(testing::single_arc());
  EXPECT_TRUE(arc.applicable);
  EXPECT_TRUE(arc.holds);
  EXPECT_EQ(lhs_rational(arc), q(1));
}

TEST(Levine1, IsolatedVertexIsNotApplicable) {
  const IdentityReport r = check_levine1(parse_digraph("vertex lonely\narc a b\narc b a"));
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.passes());
  EXPECT_FALSE(r.passes(true));
  EXPECT_TRUE(std::holds_alternative<std::monostate>(r.rhs));
  EXPECT_NE(r.note.find("lonely"), std::string::npos);
}

TEST(Levine1, WeightedSourceUsesInverseFactor) {
  const IdentityReport r = check_levine1(parse_digraph("arc u v 2\narc u w 3\narc v w\narc w v"));
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
}

TEST(Levine2, Examples) {
  const IdentityReport pair = check_levine2(testing::bidirected_pair(), "u", "v");
  EXPECT_TRUE(pair.holds);
  EXPECT_EQ(lhs_rational(pair), q(1));
  for (std::size_t e = 0; e < 3; ++e) {
    const IdentityReport c3 = check_levine2(testing::directed_cycle3(), e);
    EXPECT_TRUE(c3.holds);
    EXPECT_EQ(lhs_rational(c3), q(1));
  }
}

TEST(Levine2, SourceViolatesHypothesis) {
  const WeightedDigraph d = parse_digraph("arc s a\narc a b\narc b a");
  try {
    check_levine2(d, "s", "a");
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("'s'"), std::string::npos);
  }
}

TEST(Levine2, SinkHeadWithSingleInArcIsNotApplicable) {
  // Every vertex has an in-arc; t has r = 1 and d = 0.
  const WeightedDigraph d = parse_digraph("arc a b\narc b a\narc a t");
  const IdentityReport r = check_levine2(d, "a", "t");
  EXPECT_FALSE(r.applicable);
  EXPECT_TRUE(check_levine2(d, "a", "b").applicable);
}

TEST(Mtt, Examples) {
  const IdentityReport c3 = check_mtt(testing::directed_cycle3());
  EXPECT_TRUE(c3.holds);
  EXPECT_EQ(std::get<std::vector<Rational>>(c3.lhs),
            (std::vector<Rational>{q(1), q(1), q(1), q(3), q(1), q(1), q(1), q(3)}));
  EXPECT_TRUE(check_mtt(testing::isolated_vertex()).holds);
  EXPECT_THROW(check_mtt(testing::bidirected_clique3(), 3), GuardExceeded);
}

TEST(Identities, AllHoldOnRandomWeightedDigraphs) {
  DigraphGenerator gen(555);
  for (int i = 0; i < 80; ++i) {
    const WeightedDigraph d = gen.next();
    EXPECT_TRUE(check_block_decomposition(d).holds);
    EXPECT_TRUE(check_eq4(d).holds);
    EXPECT_TRUE(check_eq3(d).holds);
    EXPECT_TRUE(check_eq5(d).holds);
    EXPECT_TRUE(check_mtt(d).holds);
    const IdentityReport l1 = check_levine1(d);
    EXPECT_TRUE(l1.passes());
  }
}

TEST(Identities, UnitWeightEq3ReproducesEq5) {
  DigraphGenerator gen(8080);
  for (int i = 0; i < 60; ++i) {
    const WeightedDigraph d = gen.next();
    const IdentityReport e3 = check_eq3(d.with_unit_weights());
    const IdentityReport e5 = check_eq5(d);
    EXPECT_EQ(lhs_rational(e3), lhs_rational(e5));
    EXPECT_EQ(rhs_rational(e3), rhs_rational(e5));
  }
}

TEST(Verify, OrderAndArcIteration) {
  const auto reports = verify(testing::bidirected_pair(), IdentitySelection::All);
  std::vector<std::string> names;
  for (const auto& r : reports) names.push_back(r.identity);
  EXPECT_EQ(names, (std::vector<std::string>{"block", "eq4", "eq3", "eq5", "eq6", "eq6", "levine1", "levine2",
                                             "levine2", "mtt"}));
  VerifyOptions fixed;
  fixed.arc = 1;
  const auto one = verify(testing::bidirected_pair(), IdentitySelection::Eq6, fixed);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].arc, "v->u");
}

TEST(Verify, LenientModeTurnsGatesIntoNotApplicable) {
  const WeightedDigraph d = parse_digraph("arc s a\narc a b\narc b a");
  EXPECT_THROW(verify(d, IdentitySelection::Levine2), PreconditionError);
  VerifyOptions lenient;
  lenient.lenient = true;
  lenient.oracle_limit = 0;
  for (const auto& r : verify(d, IdentitySelection::All, lenient)) {
    if (r.identity == "levine2" || r.identity == "mtt") {
      EXPECT_FALSE(r.applicable) << r.identity;
    }
    EXPECT_TRUE(r.passes()) << r.identity;
  }
}

TEST(Verify, SelectionNames) {
  EXPECT_EQ(parse_identity_selection("eq4"), IdentitySelection::Eq4);
  EXPECT_EQ(parse_identity_selection("levine2"), IdentitySelection::Levine2);
  EXPECT_FALSE(parse_identity_selection("eq7"));
}

TEST(Report, JsonContract) {
  VerifyOptions lenient;
  lenient.lenient = true;
  const auto reports = verify(testing::single_arc(q(1), q(3), q(2)), IdentitySelection::All, lenient);
  const auto doc = nlohmann::json::parse(render_json(reports));
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), reports.size());
  for (const auto& item : doc) {
    for (const char* key : {"identity", "holds", "applicable", "lhs", "rhs", "hypotheses", "digraph_summary"}) {
      EXPECT_TRUE(item.contains(key)) << key;
    }
  }
  const auto& eq3 = doc[2];
  EXPECT_EQ(eq3["identity"], "eq3");
  EXPECT_EQ(eq3["lhs"], "6");
  EXPECT_EQ(parse_rational(eq3["rhs"].get<std::string>()), q(6));
  EXPECT_EQ(doc[1]["lhs"], nlohmann::json::array({"0", "6", "-5", "1"}));  // lambda (lambda-2)(lambda-3)
  EXPECT_EQ(eq3["digraph_summary"]["vertices"], 2);
  EXPECT_EQ(eq3["hypotheses"]["weakly_connected"], true);
}

TEST(Report, TextStates) {
  const std::string text = render_text(check_levine1(parse_digraph("vertex x\narc a b")));
  EXPECT_NE(text.find("levine1: NOT-APPLICABLE"), std::string::npos);
  EXPECT_NE(render_text(check_eq3(testing::bidirected_pair())).find("eq3: HOLDS"), std::string::npos);
}

}  // namespace
}  // namespace midtree
