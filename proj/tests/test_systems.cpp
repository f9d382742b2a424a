#include <gtest/gtest.h>

#include <random>

#include "forge/fixtures.hpp"
#include "forge/systems.hpp"
#include "support.hpp"

using namespace forge;
using namespace forge::systems;

namespace {

std::int64_t mod(const Rational& q, std::int64_t p) {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  // den is invertible mod p for the integer data used here.
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  mpz_class r = (num * inv) % p;
  return r.get_si();
}

BinaryAlgebra sl2() {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  BinaryAlgebra a({"h", "e", "f"});
  a.table[0][1][1] = 2;
  a.table[1][0][1] = -2;
  a.table[0][2][2] = -2;
  a.table[2][0][2] = 2;
  a.table[1][2][0] = 1;
  a.table[2][1][0] = -1;
  return a;
}

}  // namespace

TEST(Systems, ZeroSystem) {
  TernaryStructureConstants zero({"x", "y"});
  EXPECT_TRUE(check_lts(zero).ok);
  EXPECT_TRUE(lie_triple_check(zero).ok);
  auto u = build_envelope(zero);
  EXPECT_EQ(u.dim, 6);
  EXPECT_TRUE(check_leibniz(u).ok);
  EXPECT_EQ(format_entry(u.product(u.unit(0), u.unit(1)), display_names(u)), "xy");
}

TEST(Systems, TwoDimensionalFixturesAreLeibnizTripleSystems) {
  for (const char* name : {"8.1", "8.2", "8.3", "8.4"}) {
    EXPECT_TRUE(check_lts(fixtures::system(name)).ok) << name;
  }
  EXPECT_TRUE(lie_triple_check(fixtures::system("8.1")).ok);
  EXPECT_FALSE(lie_triple_check(fixtures::system("8.3")).ok);
  EXPECT_TRUE(check_lts(fixtures::system85_symbolic()).ok);
}

TEST(Systems, BrokenSystemIsRejected) {
  auto t = fixtures::system("8.1");
  t.at(0, 0, 0, 0) = 1;  // <x,x,x> = x
  auto r = check_lts(t);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations.front().tuple.size(), 5u);
}

TEST(Systems, LeibnizCheckOnKnownAlgebras) {
  EXPECT_TRUE(check_leibniz(sl2()).ok);
  // A non-Lie Leibniz algebra: y.y = x.
  BinaryAlgebra nonlie({"x", "y"});
  nonlie.table[1][1][0] = 1;
  EXPECT_TRUE(check_leibniz(nonlie).ok);
  // Perturbing one entry of sl2 breaks the identity.
  auto broken = sl2();
  broken.table[1][2][0] = 2;
  auto r = check_leibniz(broken);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.violations.empty());
  // Associative but not Leibniz.
  EXPECT_FALSE(check_leibniz(matrix_algebra(2, false)).ok);
}

TEST(Systems, EnvelopeRestrictsToTheTripleProduct) {
  for (const char* name : {"8.1", "8.2", "8.3", "8.4"}) {
    auto t = fixtures::system(name);
    auto u = build_envelope(t);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          auto v = u.product(u.product(u.unit(i), u.unit(j)), u.unit(k));
          std::vector<Rational> expected(6, 0);
          for (int l = 0; l < 2; ++l) expected[l] = t.at(i, j, k, l);
          EXPECT_EQ(v, expected) << name;
        }
  }
}

// The stated envelope product is not Leibniz on (a, b, cd) whenever
// a.(b.cd) = a<b,c,d> - a<b,d,c> differs from <a,b,c>d - <a,b,d>c - <a,c,d>b + <a,d,c>b.
TEST(Systems, EnvelopeProductFailsOnDegreeFourTriples) {
  auto u = build_envelope(fixtures::system("8.1"));
  auto names = display_names(u);
  auto r = check_leibniz(u);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violations.size(), 8u);
  for (const auto& v : r.violations) {
    int degree_one = (v.tuple[0] < 2) + (v.tuple[1] < 2) + (v.tuple[2] < 2);
    EXPECT_EQ(degree_one, 2) << names[v.tuple[0]] << "," << names[v.tuple[1]] << "," << names[v.tuple[2]];
  }
  // (x, x, xy): (x.x).xy = 0, (x.xy).x = -yx, x.(x.xy) = -xy.
  auto x = u.unit(0), xy = u.unit(3);
  EXPECT_EQ(format_entry(u.product(u.product(x, x), xy), names), ".");
  EXPECT_EQ(format_entry(u.product(u.product(x, xy), x), names), "-yx");
  EXPECT_EQ(format_entry(u.product(x, u.product(x, xy)), names), "-xy");
}

TEST(Systems, AssociatorClosureProperty) {
  auto t = props::associator_closure_trials(9, 3u);
  EXPECT_EQ(t.failures, 0) << (t.first_failures.empty() ? "" : t.first_failures[0]);
}

TEST(Systems, ChangeOfBasisPreservesAssociativity) {
  std::mt19937 rng(1);
  auto a = props::change_basis(matrix_algebra(2, true), props::random_invertible(3, rng));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        EXPECT_EQ(a.product(a.product(a.unit(i), a.unit(j)), a.unit(k)),
                  a.product(a.unit(i), a.product(a.unit(j), a.unit(k))));
}

TEST(Systems, FormatEntry) {
  BinaryAlgebra u = build_envelope(TernaryStructureConstants({"x", "y"}));
  auto names = display_names(u);
  EXPECT_EQ(names, (std::vector<std::string>{"x", "y", "x^2", "xy", "yx", "y^2"}));
  std::vector<Rational> v(6, 0);
  EXPECT_EQ(format_entry(v, names), ".");
  v[3] = 2;
  v[4] = 2;
  EXPECT_EQ(format_entry(v, names), "2(xy+yx)");
  std::vector<Rational> w(6, 0);
  w[1] = -1;
  EXPECT_EQ(format_entry(w, names), "-y");
}

TEST(Systems, JsonRoundTripAndErrors) {
  auto t = fixtures::system("8.2");
  auto again = parse_system_json(system_json(t));
  EXPECT_EQ(again.c, t.c);
  EXPECT_EQ(again.basis, t.basis);
  EXPECT_THROW(parse_system_json("{"), Error);
  EXPECT_THROW(parse_system_json(R"({"dim": 2, "basis": ["x"], "triple": {}})"), Error);
  EXPECT_THROW(parse_system_json(R"({"dim": 2, "basis": ["x","y"], "triple": {"x,y": "x"}})"), Error);
  EXPECT_THROW(parse_system_json(R"({"dim": 2, "basis": ["x","y"], "triple": {"x,y,z": "x"}})"), Error);
  EXPECT_THROW(parse_system_json(R"({"dim": 2, "basis": ["x","y"], "triple": {"x,y,x": "x*y"}})"), Error);
  auto parsed = parse_system_json(R"({"dim": 2, "basis": ["x","y"], "triple": {"x,y,x": "1/2*y - x"}})");
  EXPECT_EQ(parsed.at(0, 1, 0, 1), Rational(1, 2));
  EXPECT_EQ(parsed.at(0, 1, 0, 0), Rational(-1));
}

TEST(Systems, QuadraticEquations) {
  auto q = lts_equations(2);
  EXPECT_EQ(q.unknowns.size(), 16u);
  EXPECT_EQ(unknown_name(2, 0, 1, 1, 0), "alpha_122");
  EXPECT_EQ(unknown_name(2, 1, 1, 1, 1), "beta_222");
  for (const char* name : {"8.1", "8.2", "8.3", "8.4"}) EXPECT_TRUE(satisfies(q, fixtures::system(name))) << name;
  auto broken = fixtures::system("8.1");
  broken.at(0, 0, 0, 0) = 1;
  EXPECT_FALSE(satisfies(q, broken));
  TernaryStructureConstants zero({"x", "y"});
  EXPECT_TRUE(satisfies(q, zero));
  for (const auto& r : residuals(q, fixtures::system85_symbolic())) EXPECT_TRUE(r.is_zero()) << r.format();
}

TEST(Systems, SearchOverF3) {
  auto q = lts_equations(2);
  const std::int64_t p = 3;
  std::vector<std::string> mask{"alpha_122", "alpha_222"};
  auto sols = search_fp(q, p, mask);
  auto has = [&](std::int64_t a, std::int64_t b) {
    return std::find(sols.begin(), sols.end(), std::vector<std::int64_t>{a, b}) != sols.end();
  };
  // The one-parameter family: (zeta, 1 - zeta) mod 3.
  for (int z = 0; z < 3; ++z) {
    auto t = fixtures::system85(Rational(z));
    EXPECT_TRUE(has(mod(t.at(0, 1, 1, 0), p), mod(t.at(1, 1, 1, 0), p))) << z;
  }
  // The supports of the two non-Lie systems.
  for (const char* name : {"8.3", "8.4"}) {
    auto t = fixtures::system(name);
    EXPECT_TRUE(has(mod(t.at(0, 1, 1, 0), p), mod(t.at(1, 1, 1, 0), p))) << name;
  }
  // Independent check of every reported point: the residuals vanish mod p.
  for (const auto& s : sols) {
    std::map<std::string, Rational> values;
    for (const auto& u : q.unknowns) values[u] = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) values[mask[i]] = Rational(static_cast<long>(s[i]));
    for (const auto& e : q.equations) EXPECT_EQ(mod(e.evaluate(values), p), 0);
  }
  EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end()));
}

TEST(Systems, SearchErrors) {
  auto q = lts_equations(2);
  EXPECT_THROW(search_fp(q, 3, {}), Error);
  EXPECT_THROW(search_fp(q, 4, {"alpha_122"}), Error);
  EXPECT_THROW(search_fp(q, 3, {"gamma_1"}), Error);
  EXPECT_THROW(search_fp(q, 3, {"alpha_122", "alpha_122"}), Error);
  std::vector<std::string> all = q.unknowns;
  EXPECT_THROW(search_fp(q, 7, all), Error);
}
