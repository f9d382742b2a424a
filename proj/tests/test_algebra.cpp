#include <gtest/gtest.h>

#include "forge/algebra.hpp"
#include "forge/parse.hpp"
#include "forge/rewrite.hpp"

using namespace forge;

namespace {

Signature binary_o(int variants = 0) {
  Signature s;
  s.declare("o", 2, variants);
  return s;
}

Monomial leaf(const char* n) { return Monomial::leaf(Variable(n)); }

}  // namespace

TEST(Parse, InfixAndPrefixAgree) {
  auto a = parse_polynomial("(a*b)*c - a*(b*c)");
  auto b = parse_polynomial("mul(mul(a,b),c) - mul(a,mul(b,c))");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.degree(), 3);
  EXPECT_TRUE(a.is_multilinear());
}

TEST(Parse, RationalCoefficientsCollect) {
  auto p = parse_polynomial("1/2*o(a,b) + 1/3*o(a,b) - o(b,a)", binary_o());
  Monomial ab = Monomial::apply({"o", 2, 0}, {leaf("a"), leaf("b")});
  EXPECT_EQ(p.coefficient(ab), Rational(5, 6));
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(parse_polynomial("o(a,b) - o(a,b)", binary_o()).is_zero());
  EXPECT_TRUE(parse_polynomial("0").is_zero());
}

TEST(Parse, Variants) {
  auto p = parse_polynomial("o_1(a,b) - o_2(b,a)", binary_o(2));
  auto ops = p.operations();
  ASSERT_EQ(ops.size(), 2u);
  EXPECT_EQ(ops.begin()->variant, 1);
  EXPECT_EQ(ops.rbegin()->variant, 2);
  EXPECT_THROW(parse_polynomial("o_3(a,b)", binary_o(2)), ParseError);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_polynomial("o(a,b", binary_o()), ParseError);
  EXPECT_THROW(parse_polynomial("o(a)", binary_o()), Error);
  EXPECT_THROW(parse_polynomial("q(a,b)"), Error);
  EXPECT_THROW(parse_polynomial("a +"), ParseError);
  EXPECT_THROW(parse_polynomial("1/0*a"), Error);
  EXPECT_THROW(parse_polynomial("a ) b"), ParseError);
  try {
    parse_polynomial("a + $b");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, FormatRoundTrips) {
  Signature s = binary_o(2);
  for (const char* text : {"o(o(a,b),c) - o(a,o(b,c))", "2*o_1(a,b) - 1/3*o_2(b,a)", "a*(b*c) + c*(a*b)"}) {
    auto p = parse_polynomial(text, s);
    EXPECT_EQ(parse_polynomial(format(p), s), p) << text;
  }
}

TEST(Parse, DocumentStatements) {
  auto doc = parse_document(
      "# comment\n"
      "op o/2 variants 2\n"
      "assoc: o(o(a,b),c) == o(a,o(b,c))\n"
      "long: o(a,b)\n"
      "   - o(b,a)\n"
      "swap: o_2(a,b) -> -o_1(b,a)\n");
  ASSERT_EQ(doc.identities.size(), 2u);
  EXPECT_EQ(doc.identity("assoc").lhs, parse_polynomial("o(o(a,b),c) - o(a,o(b,c))", doc.signature));
  EXPECT_EQ(doc.identity("long").lhs.size(), 2u);
  EXPECT_EQ(doc.rule("swap").pattern, (OpSymbol{"o", 2, 2}));
  EXPECT_THROW(doc.identity("missing"), Error);
  EXPECT_THROW(parse_document("op o/0\n"), Error);
  EXPECT_THROW(parse_document("op o/2\nop o/3\n"), Error);
}

TEST(MonomialOrder, ShapeBeforeLeaves) {
  Signature s = binary_o();
  auto left = *parse_polynomial("o(o(c,b),a)", s).terms().begin();
  auto right = *parse_polynomial("o(a,o(b,c))", s).terms().begin();
  // leaf < apply in the first argument, so a(bc) precedes (cb)a.
  EXPECT_LT(right.first, left.first);
  auto abc = *parse_polynomial("o(o(a,b),c)", s).terms().begin();
  EXPECT_LT(abc.first, left.first);
  EXPECT_EQ(compare_shape(abc.first, left.first), std::strong_ordering::equal);
}

TEST(Substitute, DistributesAndChecksDisjointness) {
  Signature s = binary_o();
  auto p = parse_polynomial("o(a,b)", s);
  Assignment as{{Variable("a"), parse_polynomial("o(c,d) + e", s)}, {Variable("b"), Polynomial::variable("f")}};
  EXPECT_EQ(substitute(p, as), parse_polynomial("o(o(c,d),f) + o(e,f)", s));
  Assignment clash{{Variable("a"), Polynomial::variable("c")}, {Variable("b"), Polynomial::variable("c")}};
  EXPECT_THROW(substitute(p, clash), Error);
  EXPECT_EQ(substitute(p, clash, SubstitutionCheck::kNone), parse_polynomial("o(c,c)", s));
  EXPECT_THROW(substitute(p, {{Variable("a"), Polynomial::variable("c")}}), Error);
}

TEST(Polarize, CommutatorSquare) {
  Signature s = binary_o();
  // o(a,a) linearizes to o(a1,a2) + o(a2,a1).
  auto id = Identity::from("square", parse_polynomial("o(a,a)", s));
  auto lin = polarize(id);
  EXPECT_EQ(lin.lhs, parse_polynomial("o(a1,a2) + o(a2,a1)", s));
  EXPECT_TRUE(lin.is_multilinear());
}

TEST(Polarize, MultilinearIsUnchangedUpToScale) {
  Signature s = binary_o();
  auto id = Identity::from("x", parse_polynomial("-2*o(a,b) + 2*o(b,a)", s));
  EXPECT_EQ(polarize(id).lhs, parse_polynomial("o(a,b) - o(b,a)", s));
}

Monomial first_monomial(const Polynomial& p) { return p.terms().begin()->first; }

TEST(Rewrite, EliminatesSecondVariant) {
  Signature s = binary_o(2);
  auto rule = RewriteRule::make("swap", first_monomial(parse_polynomial("o_2(a,b)", s)),
                                parse_polynomial("-o_1(b,a)", s));
  auto p = parse_polynomial("o_2(o_2(a,b),c) + o_1(a,b)", s);
  // o_2(X,c) -> -o_1(c,X), then X = o_2(a,b) -> -o_1(b,a)
  EXPECT_EQ(apply_rules(p, {rule}), parse_polynomial("o_1(c,o_1(b,a)) + o_1(a,b)", s));
  EXPECT_EQ(apply_rules(p, {}), p);
}

TEST(Rewrite, ChainedRulesTerminate) {
  Signature s;
  s.declare("br", 3, 3);
  auto r2 = RewriteRule::make("r2", first_monomial(parse_polynomial("br_2(a,b,c)", s)),
                              parse_polynomial("-br_1(b,a,c)", s));
  auto r3 = RewriteRule::make("r3", first_monomial(parse_polynomial("br_3(a,b,c)", s)),
                              parse_polynomial("br_1(c,b,a) - br_1(c,a,b)", s));
  auto p = parse_polynomial("br_3(br_2(a,b,c),d,e)", s);
  auto got = apply_rules(p, {r2, r3});
  EXPECT_EQ(got, parse_polynomial("-br_1(e,d,br_1(b,a,c)) + br_1(e,br_1(b,a,c),d)", s));
}

TEST(Rewrite, CyclicRulesAreRejected) {
  Signature s = binary_o(2);
  auto forward = RewriteRule::make("f", first_monomial(parse_polynomial("o_1(a,b)", s)),
                                   parse_polynomial("o_2(b,a)", s));
  auto back = RewriteRule::make("b", first_monomial(parse_polynomial("o_2(a,b)", s)),
                                parse_polynomial("o_1(b,a)", s));
  EXPECT_THROW(apply_rules(parse_polynomial("o_1(a,b)", s), {forward, back}), Error);
}

TEST(Rewrite, MalformedRules) {
  Signature s = binary_o(2);
  auto repeated = first_monomial(parse_polynomial("o_2(a,a)", s));
  EXPECT_THROW(RewriteRule::make("r", repeated, parse_polynomial("o_1(a,a)", s)), Error);
  auto lhs = first_monomial(parse_polynomial("o_2(a,b)", s));
  EXPECT_THROW(RewriteRule::make("r", lhs, parse_polynomial("o_1(a,c)", s)), Error);
  EXPECT_THROW(RewriteRule::make("r", lhs, parse_polynomial("o_1(a,o_1(b,b))", s)), Error);
}

TEST(Rewrite, Proportional) {
  Signature s = binary_o();
  auto p = parse_polynomial("o(a,b) - o(b,a)", s);
  EXPECT_TRUE(proportional(p, Rational(-3, 2) * p));
  EXPECT_FALSE(proportional(p, parse_polynomial("o(a,b) + o(b,a)", s)));
  EXPECT_EQ(normalize_scalar(Rational(-3, 2) * p), p);
}
