#include <gtest/gtest.h>

#include <random>

#include "forge/consequence.hpp"
#include "forge/leibniz_free.hpp"
#include "forge/linalg.hpp"
#include "forge/parse.hpp"

using namespace forge;
using namespace forge::consequence;

namespace {

SparseVector dense(const std::vector<int>& v) {
  std::map<std::size_t, Rational> m;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m[i] = v[i];
  return make_sparse(m);
}

SparseVector combine(const std::map<std::size_t, Rational>& combo, const std::vector<SparseVector>& gens) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [g, c] : combo)
    for (const auto& [i, x] : gens.at(g)) acc[i] += c * x;
  return make_sparse(acc);
}

Signature o_sig() {
  Signature s;
  s.declare("o", 2);
  return s;
}

const OpSymbol kO{"o", 2, 0};

}  // namespace

TEST(Linalg, RankAndCertificatesOnConstructedSpan) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  const int k = 6, width = 10;
  std::vector<SparseVector> gens;
  // Unit-triangular rows: independent by construction.
  for (int i = 0; i < k; ++i) {
    std::vector<int> v(width, 0);
    v[i] = 1;
    for (int j = i + 1; j < width - 1; ++j) v[j] = entry(rng);
    gens.push_back(dense(v));
  }
  // Random combinations of them: dependent.
  for (int r = 0; r < 4; ++r) {
    std::map<std::size_t, Rational> combo;
    for (int i = 0; i < k; ++i) combo[i] = entry(rng);
    gens.push_back(combine(combo, gens));
  }
  std::shuffle(gens.begin(), gens.end(), rng);
  EchelonSpan span;
  for (const auto& g : gens) span.add(g);
  EXPECT_EQ(span.rank(), static_cast<std::size_t>(k));
  EXPECT_EQ(span.generators(), gens.size());

  auto deps = span.dependencies();
  EXPECT_EQ(deps.size(), gens.size() - k);
  for (const auto& d : deps) EXPECT_TRUE(combine(d, gens).empty());

  std::map<std::size_t, Rational> combo{{0, 3}, {2, Rational(-1, 2)}, {7, 5}};
  auto target = combine(combo, gens);
  auto m = span.express(target);
  ASSERT_TRUE(m.member);
  EXPECT_EQ(combine(m.combination, gens), target);

  // The last column is never used by a generator.
  std::vector<int> outside(width, 0);
  outside[width - 1] = 1;
  auto miss = span.express(dense(outside));
  EXPECT_FALSE(miss.member);
  ASSERT_TRUE(miss.witness.has_value());
  EXPECT_EQ(*miss.witness, static_cast<std::size_t>(width - 1));
}

TEST(Linalg, ReducedEchelon) {
  auto rows = reduced_echelon({dense({2, 4, 0}), dense({1, 2, 1}), dense({3, 6, 1})});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], dense({1, 2, 0}));
  EXPECT_EQ(rows[1], dense({0, 0, 1}));
}

TEST(Consequence, ShapeCountsAreCatalan) {
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_shapes({kO}, n).size(), catalan[n - 1]) << n;
  const OpSymbol t{"t", 3, 0};
  EXPECT_EQ(enumerate_shapes({t}, 3).size(), 1u);
  EXPECT_EQ(enumerate_shapes({t}, 4).size(), 0u);
  EXPECT_EQ(enumerate_shapes({t}, 5).size(), 3u);
  EXPECT_EQ(enumerate_basis({t}, 5, letters(5)).size(), 360u);
  // Two binary operations: 2^(n-1) labelings of each binary shape.
  EXPECT_EQ(enumerate_shapes({kO, OpSymbol{"o", 2, 1}}, 3).size(), 8u);
}

TEST(Consequence, BasisCoordinatesRoundTrip) {
  auto basis = enumerate_basis({kO}, 3, letters(3));
  EXPECT_EQ(basis.size(), 12u);
  auto p = parse_polynomial("o(o(a,b),c) - 2*o(a,o(c,b))", o_sig());
  EXPECT_EQ(basis.polynomial(basis.coordinates(p)), p);
  EXPECT_THROW(basis.coordinates(parse_polynomial("o(o(a,b),d)", o_sig())), Error);
}

TEST(Consequence, SameDegreeInstances) {
  auto comm = Identity::from("comm", parse_polynomial("o(a,b) - o(b,a)", o_sig()));
  auto gens = same_degree_instances(comm, letters(2));
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].value, comm.lhs);
  EXPECT_EQ(gens[1].value, -comm.lhs);
}

TEST(Consequence, InSpanCertificateAndWitness) {
  auto basis = enumerate_basis({kO}, 3, letters(3));
  auto comm = Identity::from("comm", parse_polynomial("o(a,b) - o(b,a)", o_sig()));
  auto lifted = lifted_instances(comm, 3, letters(3));
  for (const auto& g : lifted) {
    EXPECT_EQ(g.value.degree(), 3) << g.label;
    EXPECT_TRUE(g.value.is_multilinear()) << g.label;
  }
  auto target = parse_polynomial("o(o(a,b),c) - o(c,o(b,a))", o_sig());
  auto r = in_span(target, lifted, basis);
  ASSERT_TRUE(r.member);
  EXPECT_EQ(r.certificate.expand(), target);

  auto assoc = parse_polynomial("o(o(a,b),c) - o(a,o(b,c))", o_sig());
  auto miss = in_span(assoc, lifted, basis);
  EXPECT_FALSE(miss.member);
  EXPECT_TRUE(miss.witness.has_value());

  auto zero = in_span(Polynomial(), lifted, basis);
  EXPECT_TRUE(zero.member);
  EXPECT_TRUE(zero.certificate.terms.empty());
  EXPECT_EQ(zero.certificate.format(), "0");
}

TEST(Consequence, SetsEquivalent) {
  auto s = o_sig();
  auto assoc = Identity::from("assoc", parse_polynomial("o(o(a,b),c) - o(a,o(b,c))", s));
  auto flipped = Identity::from("flip", parse_polynomial("2*o(c,o(b,a)) - 2*o(o(c,b),a)", s));
  auto lassoc = Identity::from("left", parse_polynomial("o(o(a,b),c) - o(o(b,a),c)", s));
  EXPECT_TRUE(sets_equivalent({assoc}, {flipped}, 3, letters(3)).equivalent);
  auto neq = sets_equivalent({assoc}, {lassoc}, 3, letters(3));
  EXPECT_FALSE(neq.equivalent);
  ASSERT_EQ(neq.b_in_a.size(), 1u);
  EXPECT_FALSE(neq.b_in_a[0].member);
}

TEST(Consequence, KernelOfLeibnizExpansionAtDegreeThree) {
  auto basis = enumerate_basis({kMul}, 3, letters(3));
  auto kernel = kernel_of_expansion(basis, [](const Monomial& m) { return leibniz::expand_binary_tree(m); });
  // 12 monomials onto the 6 left-normalized words.
  EXPECT_EQ(kernel.size(), 6u);
  for (const auto& k : kernel) EXPECT_TRUE(leibniz::expand_binary_tree(k).empty()) << format(k);
  auto leib = parse_polynomial("(a*b)*c - (a*c)*b - a*(b*c)");
  auto gens = std::vector<Generator>{};
  for (std::size_t i = 0; i < kernel.size(); ++i) gens.push_back({"K" + std::to_string(i), i, kernel[i]});
  EXPECT_TRUE(in_span(leib, gens, basis).member);
}

TEST(Consequence, TernaryDegreeThreeKernelIsZero) {
  const OpSymbol t{"t", 3, 0};
  auto basis = enumerate_basis({t}, 3, letters(3));
  auto kernel = kernel_of_expansion(basis, [](const Monomial& m) { return leibniz::expand_ternary(m); });
  EXPECT_TRUE(kernel.empty());
}
