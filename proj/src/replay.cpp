#include "forge/replay.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>

#include <json.hpp>

#include "forge/consequence.hpp"
#include "forge/fixtures.hpp"
#include "forge/kp.hpp"
#include "forge/leibniz_free.hpp"
#include "forge/parse.hpp"
#include "forge/rewrite.hpp"
#include "forge/rightcomm.hpp"
#include "forge/systems.hpp"

namespace forge::replay {

namespace {

using consequence::SpanResult;

const OpSymbol kT{"t", 3, 0};

Claim make_claim(std::string description, bool pass, std::vector<std::string> details = {}) {
  return Claim{std::move(description), pass, std::move(details)};
}

// Exact comparison of two identity lists, position by position.
Claim match_exact(std::string description, const std::vector<Identity>& got,
                  const std::vector<Identity>& expected) {
  Claim c{std::move(description), got.size() == expected.size(), {}};
  if (!c.pass) {
    c.details.push_back("expected " + std::to_string(expected.size()) + " identities, got " +
                        std::to_string(got.size()));
    return c;
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i].lhs == expected[i].lhs) continue;
    c.pass = false;
    c.details.push_back(got[i].name + ": " + format(got[i].lhs));
    c.details.push_back("  expected " + expected[i].name + ": " + format(expected[i].lhs));
  }
  return c;
}

std::vector<std::string> certificate_lines(const SpanResult& r) {
  if (!r.member) {
    return {"not in span; witness coordinate " + (r.witness ? std::to_string(*r.witness) : "?")};
  }
  return {std::to_string(r.certificate.terms.size()) + " terms: " + r.certificate.format()};
}

Claim equivalence_claim(std::string description, const std::vector<Identity>& a,
                        const std::vector<Identity>& b, int degree) {
  auto eq = consequence::sets_equivalent(a, b, degree, letters(degree));
  Claim c{std::move(description), eq.equivalent, {}};
  auto describe = [&](const std::vector<SpanResult>& rs, const std::vector<Identity>& ids,
                      const char* side) {
    std::size_t k = 0;
    for (const auto& id : ids) {
      if (id.lhs.is_zero()) continue;
      const auto& r = rs.at(k++);
      c.details.push_back(id.name + " in span(" + side + "): " + certificate_lines(r).front());
    }
  };
  describe(eq.b_in_a, b, "A");
  describe(eq.a_in_b, a, "B");
  return c;
}

std::map<OpSymbol, OpSymbol> rename(const std::string& from, int arity, int variant,
                                    const OpSymbol& to) {
  return {{OpSymbol{from, arity, variant}, to}};
}

std::vector<Identity> renamed(const std::vector<Identity>& ids,
                              const std::map<OpSymbol, OpSymbol>& renaming) {
  std::vector<Identity> out;
  for (const auto& id : ids) out.push_back(rename_ops(id, renaming));
  return out;
}

std::vector<Identity> reduced(const std::vector<Identity>& ids, const std::vector<RewriteRule>& rules) {
  std::vector<Identity> out;
  for (const auto& id : ids) out.push_back(apply_rules(id, rules));
  return out;
}

std::vector<Identity> fixture_list(std::string_view stem, const std::vector<Identity>& named_like) {
  std::vector<Identity> out;
  for (const auto& id : named_like) out.push_back(fixtures::identity(stem, id.name));
  return out;
}

Polynomial permuted(const Identity& id, const std::string& order) {
  std::vector<Polynomial> args;
  for (char ch : order) args.push_back(Polynomial::variable(std::string(1, ch)));
  return id.instantiate(args);
}

Report ex2_4() {
  Report r{"ex2.4", {}};
  const auto& doc = fixtures::document("dialgebra");
  auto out = kp::kp_apply({{}, {doc.identity("associativity")}});
  auto part1 = out.part1_flat();
  r.claims.push_back(make_claim("KP(associativity) yields 3 Part-1 and 2 Part-2 identities",
                                part1.size() == 3 && out.part2.size() == 2,
                                {std::to_string(part1.size()) + " + " + std::to_string(out.part2.size())}));
  r.claims.push_back(match_exact("KP output matches the subscripted fixtures", out.all(),
                                 fixture_list("dialgebra", out.all())));
  std::map<OpSymbol, OpSymbol> to_di{{OpSymbol{"o", 2, 1}, OpSymbol{"dashv", 2, 0}},
                                     {OpSymbol{"o", 2, 2}, OpSymbol{"vdash", 2, 0}}};
  r.claims.push_back(match_exact(
      "with o_1 = dashv, o_2 = vdash, Part 1 is left, inner and right associativity",
      renamed(part1, to_di),
      fixtures::identities("dialgebra", {"left_assoc", "inner_assoc", "right_assoc"})));
  r.claims.push_back(match_exact("with o_1 = dashv, o_2 = vdash, Part 2 is the right and left bar identities",
                                 renamed(out.part2, to_di),
                                 fixtures::identities("dialgebra", {"right_bar", "left_bar"})));
  return r;
}

Report ex2_5() {
  Report r{"ex2.5", {}};
  const auto& doc = fixtures::document("leibniz");
  auto out = kp::kp_apply({{}, fixtures::identities("leibniz", {"anticommutativity", "jacobi"})});
  r.claims.push_back(match_exact("KP(Lie) matches the subscripted fixtures", out.all(),
                                 fixture_list("leibniz", out.all())));
  std::vector<RewriteRule> rules{doc.rule("reduce_lie")};
  const auto& second = doc.identity("second_operation");
  for (const auto& id : out.part1[0]) {
    r.claims.push_back(equivalence_claim(id.name + " is equivalent to [a,b]_2 = -[b,a]_1", {id},
                                         {second}, 2));
  }
  const auto& leibniz = doc.identity("right_leibniz");
  for (const auto& id : out.part1[1]) {
    auto red = apply_rules(id, rules);
    r.claims.push_back(equivalence_claim(id.name + ", reduced, is equivalent to the right Leibniz identity",
                                         {red}, {leibniz}, 3));
  }
  const auto& anti = doc.identity("right_anticommutativity");
  for (const auto& id : out.part2) {
    auto red = apply_rules(id, rules);
    r.claims.push_back(equivalence_claim(id.name + ", reduced, is equivalent to right anticommutativity",
                                         {red}, {anti}, 3));
  }
  r.claims.push_back(match_exact("bar.1.2.a reduces to right anticommutativity term for term",
                                 {apply_rules(out.part2.at(0), rules)}, {anti}));

  // Identify c with b in the right Leibniz identity, then linearize.
  Assignment b_for_c;
  for (const auto& v : leibniz.variables) b_for_c[v] = Polynomial(Monomial::leaf(v));
  b_for_c[Variable("c")] = Polynomial::variable("b");
  auto diagonal = Identity::from("right_leibniz(a,b,b)",
                                 substitute(leibniz.lhs, b_for_c, SubstitutionCheck::kNone));
  auto linear = polarize(diagonal);
  linear.name = "linearized_leibniz";
  auto vars = letters(3);
  auto basis = consequence::enumerate_basis({OpSymbol{"lie", 2, 1}}, 3, vars);
  auto span = consequence::in_span(anti.lhs, consequence::same_degree_instances(linear, vars), basis);
  auto details = certificate_lines(span);
  details.insert(details.begin(), "linearization: " + format(linear.lhs));
  r.claims.push_back(make_claim(
      "right anticommutativity lies in the span of the linearized right Leibniz identity at b = c",
      span.member, details));
  return r;
}

Report thm3_2() {
  Report r{"thm3.2", {}};
  auto out = kp::kp_apply(
      {{OpSymbol{"br", 3, 0}}, fixtures::identities("lie_triple", {"skew", "cyclic", "derivation"})});
  auto part1 = out.part1_flat();
  r.claims.push_back(make_claim("KP(L1, L2, L3) yields 11 Part-1 and 12 Part-2 identities",
                                part1.size() == 11 && out.part2.size() == 12,
                                {std::to_string(part1.size()) + " + " + std::to_string(out.part2.size())}));
  r.claims.push_back(match_exact("Part 1 matches skew1..derivation5 term for term", part1,
                                 fixture_list("lie_triple", part1)));
  r.claims.push_back(match_exact("Part 2 matches bar.1.2.a..bar.3.2.b term for term", out.part2,
                                 fixture_list("lie_triple", out.part2)));

  const auto& doc = fixtures::document("lie_triple");
  std::vector<RewriteRule> rule2{doc.rule("reduce2")};
  std::vector<RewriteRule> both{doc.rule("reduce2"), doc.rule("reduce3")};
  auto to_t = rename("br", 3, 1, kT);
  std::vector<Identity> derivations(part1.begin() + 6, part1.end());
  std::vector<Identity> expected_a;
  for (const auto& d : derivations) expected_a.push_back(doc.identity(d.name + "a"));
  r.claims.push_back(match_exact("eliminating br_2 gives derivation1a..derivation5a",
                                 reduced(derivations, rule2), expected_a));

  auto full = renamed(reduced(out.all(), both), to_t);
  std::vector<Identity> b_forms;
  for (int k : {1, 3, 5}) b_forms.push_back(full.at(5 + k));
  r.claims.push_back(match_exact("eliminating br_2 and br_3 gives derivation1b, derivation3b, derivation5b",
                                 b_forms,
                                 fixtures::identities("lts", {"derivation1b", "derivation3b", "derivation5b"})));
  std::vector<Identity> part2_reduced(full.begin() + 11, full.end());
  std::vector<Identity> expected_part2;
  for (const auto& id : out.part2) {
    // bar.j.i.a -> j.i.aa
    std::string key = id.name.substr(4);
    key += key.back();
    expected_part2.push_back(fixtures::identity("lts", key));
  }
  r.claims.push_back(match_exact("the reduced Part-2 identities are 1.2.aa..3.2.bb", part2_reduced,
                                 expected_part2));
  std::vector<std::string> zero;
  std::vector<Identity> nonzero;
  for (const auto& id : full) {
    if (id.lhs.is_zero()) {
      zero.push_back(id.name);
    } else {
      nonzero.push_back(id);
    }
  }
  std::string zero_list;
  for (const auto& z : zero) zero_list += (zero_list.empty() ? "" : ", ") + z;
  r.claims.push_back(make_claim("the degree-3 identities reduce to zero", zero.size() == 6,
                                {"zero after reduction: " + zero_list}));
  r.claims.push_back(equivalence_claim(
      "the reduced set is equivalent to {LTS1, LTS2, LTS-B, LTS3} at degree 5", nonzero,
      fixtures::identities("lts", {"LTS1", "LTS2", "LTS-B", "LTS3"}), 5));

  auto vars = letters(5);
  std::vector<consequence::Generator> gens;
  auto inner = fixtures::identities("lts", {"2skew", "2cyclic", "3skew", "3cyclic", "derivation3b"});
  for (std::size_t s = 0; s < inner.size(); ++s) {
    auto more = consequence::same_degree_instances(inner[s], vars, s);
    gens.insert(gens.end(), more.begin(), more.end());
  }
  auto basis = consequence::enumerate_basis({kT}, 5, vars);
  auto span = consequence::in_span(fixtures::identity("lts", "derivation5b").lhs, gens, basis);
  r.claims.push_back(make_claim(
      "derivation5b is redundant: it lies in the span of 2skew, 2cyclic, 3skew, 3cyclic, derivation3b",
      span.member && span.certificate.expand() == fixtures::identity("lts", "derivation5b").lhs,
      certificate_lines(span)));
  return r;
}

Report lem3_3() {
  Report r{"lem3.3", {}};
  r.claims.push_back(equivalence_claim(
      "{LTS-A, LTS-B} is equivalent to {LTS1, LTS2, LTS-B, LTS3}",
      fixtures::identities("lts", {"LTS-A", "LTS-B"}),
      fixtures::identities("lts", {"LTS1", "LTS2", "LTS-B", "LTS3"}), 5));
  const auto& s1 = fixtures::identity("lts", "LTS1");
  const auto& s2 = fixtures::identity("lts", "LTS2");
  const auto& s4 = fixtures::identity("lts", "LTS3");
  const auto& sa = fixtures::identity("lts", "LTS-A");
  const auto& sb = fixtures::identity("lts", "LTS-B");
  struct Equation {
    std::string text;
    Polynomial lhs;
    Polynomial rhs;
  };
  std::vector<Equation> eqs{
      {"S1(a,b,c,d,e) = SA(a,b,c,d,e) + SA(a,c,b,d,e)", permuted(s1, "abcde"),
       permuted(sa, "abcde") + permuted(sa, "acbde")},
      {"S2(a,b,c,d,e) = SA(a,b,c,d,e) + SA(a,d,b,c,e) + SA(a,c,d,b,e)", permuted(s2, "abcde"),
       permuted(sa, "abcde") + permuted(sa, "adbce") + permuted(sa, "acdbe")},
      {"S4(a,b,c,d,e) = -SA(c,a,b,d,e) - SB(c,d,a,b,e)", permuted(s4, "abcde"),
       -permuted(sa, "cabde") - permuted(sb, "cdabe")},
      {"SA(a,b,c,d,e) = S1(a,b,c,d,e) + S4(c,b,a,d,e) + SB(a,d,c,b,e)", permuted(sa, "abcde"),
       permuted(s1, "abcde") + permuted(s4, "cbade") + permuted(sb, "adcbe")},
  };
  for (const auto& e : eqs) {
    Polynomial diff = e.lhs - e.rhs;
    r.claims.push_back(make_claim(e.text, diff.is_zero(),
                                  diff.is_zero() ? std::vector<std::string>{}
                                                 : std::vector<std::string>{"difference: " + format(diff)}));
  }
  return r;
}

Report sec4() {
  Report r{"sec4", {}};
  auto vars = letters(5);
  auto gens = consequence::all_instances(fixtures::identities("lts", {"LTS-A", "LTS-B"}), vars);
  auto basis = consequence::enumerate_basis({kT}, 5, vars);
  for (const auto& op : fixtures::operator_identities()) {
    auto span = consequence::in_span(op.lhs, gens, basis);
    bool exact = span.member && span.certificate.expand() == op.lhs;
    r.claims.push_back(make_claim(op.name + " lies in the instance span of {LTS-A, LTS-B}", exact,
                                  certificate_lines(span)));
  }
  return r;
}

Report prop5_5() {
  using leibniz::word;
  using leibniz::operator+;
  using leibniz::operator-;
  Report r{"prop5.5", {}};
  for (const char* name : {"LTS-A", "LTS-B"}) {
    r.claims.push_back(make_claim(std::string(name) + " holds for <<a,b>,c> in the free Leibniz algebra",
                                  leibniz::holds_in_free(fixtures::identity("lts", name))));
  }
  Signature sig;
  sig.declare("t", 3);
  struct Expansion {
    std::string term;
    leibniz::TensorPolynomial expected;
  };
  std::vector<Expansion> expansions{
      {"t(t(a,b,c),d,e)", word("abcde")},
      {"t(a,b,t(c,d,e))", word("abcde") - word("abdce") - word("abecd") + word("abedc")},
      {"t(a,t(b,c,d),e)", word("abcde") - word("acbde") - word("adbce") + word("adcbe")},
  };
  for (const auto& e : expansions) {
    auto got = leibniz::expand_ternary(parse_polynomial(e.term, sig));
    r.claims.push_back(make_claim(e.term + " = " + leibniz::format(e.expected), got == e.expected,
                                  {"computed " + leibniz::format(got)}));
  }
  struct Product {
    std::string text;
    std::string left;
    std::string right;
    leibniz::TensorPolynomial expected;
  };
  std::vector<Product> products{
      {"a.b = ab", "a", "b", word("ab")},
      {"ab.c = abc", "ab", "c", word("abc")},
      {"a.bc = abc - acb", "a", "bc", word("abc") - word("acb")},
      {"abc.d = abcd", "abc", "d", word("abcd")},
      {"ab.cd = abcd - abdc", "ab", "cd", word("abcd") - word("abdc")},
      {"a.bcd = abcd - acbd - adbc + adcb (the last sign is printed as -)", "a", "bcd",
       word("abcd") - word("acbd") - word("adbc") + word("adcb")},
  };
  for (const auto& p : products) {
    auto got = leibniz::free_product(word(p.left), word(p.right));
    r.claims.push_back(make_claim(p.text, got == p.expected, {"computed " + leibniz::format(got)}));
  }
  // The degree-4 envelope computation forces a.bcd = <a,b,c>d - <a,c,b>d - <a,d,b>c + <a,d,c>b.
  auto degree4 = word("abcd") - word("acbd") - word("adbc") + word("adcb");
  auto abcd = leibniz::free_product(word("a"), word("bcd"));
  r.claims.push_back(make_claim("a.bcd agrees with the degree-4 Leibniz computation", abcd == degree4,
                                {"computed " + leibniz::format(abcd)}));
  return r;
}

bool proportional_rc(const rightcomm::RCPolynomial& a, const rightcomm::RCPolynomial& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a.size() != b.size()) return false;
  Rational ratio = a.begin()->second / b.begin()->second;
  for (const auto& [w, c] : a) {
    auto it = b.find(w);
    if (it == b.end() || c != ratio * it->second) return false;
  }
  return true;
}

Report thm6_3() {
  Report r{"thm6.3", {}};
  const auto& jd = fixtures::document("jordan");
  const auto& rj = jd.identity("RJ");
  const auto& ro = jd.identity("RO");
  auto vars4 = letters(4);
  for (const auto& [name, linear] :
       std::vector<std::pair<std::string, const Identity*>>{{"right_jordan", &rj}, {"right_osborn", &ro}}) {
    auto pol = polarize(jd.identity(name));
    auto relabelled = rightcomm::rc_expand(pol.relabel(vars4));
    bool ok = proportional_rc(relabelled, rightcomm::rc_expand(linear->lhs));
    r.claims.push_back(make_claim("the linearization of " + name + " is a multiple of " + linear->name +
                                      " under right commutativity",
                                  ok, {"linearization: " + rightcomm::format(relabelled)}));
  }
  for (const char* name : {"LTS1", "LTS2"}) {
    auto p = rightcomm::permuted_associator_expand(fixtures::identity("lts", name));
    r.claims.push_back(make_claim(std::string(name) + " vanishes under right commutativity alone",
                                  p.empty(), {"straightened: " + rightcomm::format(p)}));
  }
  struct Expression {
    std::string source;
    std::string fixture;
    std::vector<std::pair<std::string, int>> combination;
  };
  std::vector<Expression> expressions{
      {"LTS-B", "LTS-B.rc",
       {{"RJ(c*e,b,d,a)", 1}, {"RJ(d*e,b,c,a)", -1}, {"RJ(b,c,e,a)*d", 1}, {"RJ(b,d,e,a)*c", -1},
        {"RO(a,b,c*e,d)", -1}, {"RO(a,b,d*e,c)", 1}, {"RO(a,b,c,e)*d", -1}, {"RO(a,b,d,e)*c", 1}}},
      {"LTS3", "LTS3.rc",
       {{"c*RJ(a,d,e,b)", 1}, {"c*RJ(b,d,e,a)", -1}, {"RO(c*e,a,b,d)", 1}, {"RO(c*e,b,a,d)", -1},
        {"RO(c,a,d*e,b)", -1}, {"RO(c,b,d*e,a)", 1}, {"RO(c,a,b,e)*d", 1}, {"RO(c,b,a,e)*d", -1}}},
  };
  for (const auto& e : expressions) {
    auto got = rightcomm::permuted_associator_expand(fixtures::identity("lts", e.source));
    const auto& printed = jd.identity(e.fixture).lhs;
    auto expected = rightcomm::rc_expand(printed);
    // Term for term: every printed monomial is already a canonical word.
    bool canonical = printed.size() == expected.size();
    for (const auto& [w, c] : expected) canonical = canonical && printed.coefficient(rightcomm::rc_monomial(w)) == c;
    r.claims.push_back(make_claim(e.source + " under the permuted associator has 16 canonical terms as printed",
                                  got == expected && got.size() == 16 && canonical,
                                  {rightcomm::format(got)}));
    std::vector<std::string> preferred;
    for (const auto& [label, sign] : e.combination) preferred.push_back(label);
    auto span = rightcomm::jordan_reduces(got, rj, ro, preferred);
    bool ok = span.member;
    std::vector<std::string> details = certificate_lines(span);
    for (const auto& [label, sign] : e.combination) {
      Rational c = span.certificate.coefficient_of(label);
      if (c != sign) {
        ok = false;
        details.push_back(label + " has coefficient " + to_string(c) + ", expected " + std::to_string(sign));
      }
    }
    r.claims.push_back(make_claim(e.source + " is the stated combination of RJ and RO liftings", ok, details));
  }
  for (const char* name : {"LTS-A", "LTS-B"}) {
    auto target = rightcomm::permuted_associator_expand(fixtures::identity("lts", name));
    auto span = rightcomm::jordan_reduces(target, rj, ro);
    r.claims.push_back(make_claim(std::string(name) + " follows from RJ and RO under the permuted associator",
                                  span.member, certificate_lines(span)));
  }
  return r;
}

std::vector<std::pair<std::string, systems::TernaryStructureConstants>> paper_systems() {
  std::vector<std::pair<std::string, systems::TernaryStructureConstants>> out;
  for (const char* name : {"8.1", "8.2", "8.3", "8.4"}) out.emplace_back(name, fixtures::system(name));
  for (int z : {0, 1, 2}) {
    out.emplace_back("8.5-zeta" + std::to_string(z), fixtures::system85(Rational(z)));
  }
  return out;
}

bool restricts_to_triple(const systems::BinaryAlgebra& u, const systems::TernaryStructureConstants& t) {
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j)
      for (int k = 0; k < t.dim; ++k) {
        auto v = u.product(u.product(u.unit(i), u.unit(j)), u.unit(k));
        for (int l = 0; l < u.dim; ++l) {
          Rational expected = l < t.dim ? t.at(i, j, k, l) : Rational(0);
          if (v[l] != expected) return false;
        }
      }
  return true;
}

Report thm7_1() {
  Report r{"thm7.1", {}};
  for (const auto& [name, t] : paper_systems()) {
    auto u = systems::build_envelope(t);
    auto leib = systems::check_leibniz(u);
    r.claims.push_back(make_claim("system " + name + ": U(T) has dimension 6 and is a Leibniz algebra",
                                  u.dim == 6 && leib.ok,
                                  {"dimension " + std::to_string(u.dim) + ", " +
                                   std::to_string(leib.violations.size()) + " violated triples of 216"}));
    r.claims.push_back(make_claim("system " + name + ": (ab).c reproduces <a,b,c> on T",
                                  restricts_to_triple(u, t)));
  }
  auto t = systems::associator_system(systems::matrix_algebra(2, true));
  bool lie = systems::lie_triple_check(t).ok;
  bool lts = systems::check_lts(t).ok;
  auto u = systems::build_envelope(t);
  r.claims.push_back(make_claim(
      "the associator system of upper-triangular 2x2 matrices is a Lie and Leibniz triple system "
      "with a Leibniz envelope of dimension 12",
      lie && lts && u.dim == 12 && systems::check_leibniz(u).ok));
  return r;
}

Report thm7_3() {
  Report r{"thm7.3-deg5", {}};
  auto vars = letters(5);
  auto basis = consequence::enumerate_basis({kT}, 5, vars);
  auto kernel = consequence::kernel_of_expansion(
      basis, [](const Monomial& m) { return leibniz::expand_ternary(m); });
  auto gens = consequence::all_instances(fixtures::identities("lts", {"LTS-A", "LTS-B"}), vars);
  consequence::InstanceSpan instance_span(gens, [&](const Polynomial& p) { return basis.coordinates(p); });
  std::vector<consequence::Generator> kernel_gens;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    kernel_gens.push_back({"K" + std::to_string(i + 1), i, kernel[i]});
  }
  consequence::InstanceSpan kernel_span(kernel_gens, [&](const Polynomial& p) { return basis.coordinates(p); });
  r.claims.push_back(make_claim("the ternary degree-5 space has dimension 360 and 240 LTS instances",
                                basis.size() == 360 && gens.size() == 240,
                                {std::to_string(basis.size()) + " monomials, " + std::to_string(gens.size()) +
                                 " instances"}));
  bool kernel_in = std::all_of(kernel.begin(), kernel.end(),
                               [&](const Polynomial& k) { return instance_span.express(k).member; });
  bool instances_in = std::all_of(gens.begin(), gens.end(), [&](const consequence::Generator& g) {
    return kernel_span.express(g.value).member;
  });
  r.claims.push_back(make_claim("the kernel of the expansion lies in the instance span", kernel_in));
  r.claims.push_back(make_claim("every instance lies in the kernel", instances_in));
  r.claims.push_back(make_claim("kernel dimension equals the instance rank",
                                kernel.size() == instance_span.rank(),
                                {"kernel " + std::to_string(kernel.size()) + ", instance rank " +
                                 std::to_string(instance_span.rank())}));
  return r;
}

Report sec8() {
  Report r{"sec8", {}};
  auto systems_list = paper_systems();
  auto equations = systems::lts_equations(2);
  bool quadratic = std::all_of(equations.equations.begin(), equations.equations.end(), [](const MPoly& e) {
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& term) {
      unsigned total = 0;
      for (const auto& [name, k] : term.first) total += k;
      return total == 2;
    });
  });
  r.claims.push_back(make_claim("LTS-A and LTS-B give homogeneous quadratic equations in 16 unknowns",
                                equations.unknowns.size() == 16 && quadratic,
                                {std::to_string(equations.equations.size()) + " distinct equations"}));
  for (const auto& [name, t] : systems_list) {
    bool is_lie = name == "8.1" || name == "8.2";
    auto lts = systems::check_lts(t);
    auto lie = systems::lie_triple_check(t);
    r.claims.push_back(make_claim("system " + name + " is a Leibniz triple system" +
                                      (is_lie ? " and a Lie triple system" : " but not a Lie triple system"),
                                  lts.ok && lie.ok == is_lie && systems::satisfies(equations, t)));
  }
  auto symbolic = fixtures::system85_symbolic();
  auto res = systems::residuals(equations, symbolic);
  bool all_zero = std::all_of(res.begin(), res.end(), [](const MPoly& p) { return p.is_zero(); });
  r.claims.push_back(make_claim("system 8.5 satisfies the equations for every zeta",
                                all_zero && systems::check_lts(symbolic).ok));

  // LTS-B on generic elements a = a1 x + a2 y, ...
  std::map<Variable, std::vector<MPoly>> generic;
  for (const auto& v : letters(5)) {
    generic[v] = {MPoly::unknown(v.name() + "1"), MPoly::unknown(v.name() + "2")};
  }
  MPoly zeta = MPoly::unknown("zeta");
  auto u = [](const char* s) { return MPoly::unknown(s); };
  MPoly expected_x = zeta * (u("a1") * zeta + u("a2") * (MPoly(1) - zeta)) * u("b2") * u("c2") * u("d2") * u("e2");
  Signature sig;
  sig.declare("t", 3);
  bool first_zero = true;
  bool terms_equal = true;
  std::vector<std::string> details;
  for (const char* term : {"t(a,b,t(c,d,e))", "t(t(a,b,c),d,e)", "t(t(a,b,d),c,e)", "t(t(a,b,e),c,d)",
                           "t(t(a,b,e),d,c)"}) {
    auto v = systems::evaluate(symbolic, parse_polynomial(term, sig), generic);
    details.push_back(std::string(term) + " = (" + v[0].format() + ") x + (" + v[1].format() + ") y");
    if (std::string(term) == "t(a,b,t(c,d,e))") {
      first_zero = v[0].is_zero() && v[1].is_zero();
    } else {
      terms_equal = terms_equal && v[0] == expected_x && v[1].is_zero();
    }
  }
  r.claims.push_back(make_claim(
      "for system 8.5 the first LTS-B term vanishes and the other four equal "
      "zeta(a1 zeta + a2(1-zeta)) b2 c2 d2 e2 x",
      first_zero && terms_equal, details));

  auto s81 = systems::build_envelope(fixtures::system("8.1"));
  auto xy = s81.product(s81.unit(0), s81.unit(3));
  r.claims.push_back(make_claim("tables act row on column: x.(xy) = -y in system 8.1",
                                systems::format_entry(xy, systems::display_names(s81)) == "-y"));
  for (const auto& [name, t] : systems_list) {
    auto table = systems::table_text(systems::build_envelope(t));
    auto golden = std::string(fixtures::text("golden/system" + name + ".txt"));
    r.claims.push_back(make_claim("system " + name + ": envelope table matches the golden transcription",
                                  table == golden, table == golden ? std::vector<std::string>{}
                                                                   : std::vector<std::string>{table}));
  }
  return r;
}

const std::map<std::string, std::function<Report()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<Report()>, std::less<>> table{
      {"ex2.4", ex2_4},   {"ex2.5", ex2_5},   {"thm3.2", thm3_2},     {"lem3.3", lem3_3},
      {"sec4", sec4},     {"prop5.5", prop5_5}, {"thm6.3", thm6_3},   {"thm7.1", thm7_1},
      {"thm7.3-deg5", thm7_3}, {"sec8", sec8},
  };
  return table;
}

}  // namespace

bool Report::pass() const {
  return !claims.empty() &&
         std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const std::vector<std::string>& sections() {
  static const std::vector<std::string> names{"ex2.4",   "ex2.5",   "thm3.2", "lem3.3",      "sec4",
                                              "prop5.5", "thm6.3",  "thm7.1", "thm7.3-deg5", "sec8"};
  return names;
}

Report run(std::string_view section) {
  auto it = registry().find(section);
  if (it == registry().end()) throw Error("unknown replay section '" + std::string(section) + "'");
  try {
    return it->second();
  } catch (const Error& e) {
    return Report{std::string(section), {make_claim("section ran to completion", false, {e.what()})}};
  }
}

std::vector<Report> run_all(const std::vector<std::string>& names, bool parallel) {
  for (const auto& n : names) {
    if (!registry().count(n)) throw Error("unknown replay section '" + n + "'");
  }
  std::vector<Report> out;
  if (!parallel) {
    for (const auto& n : names) out.push_back(run(n));
    return out;
  }
  std::vector<std::future<Report>> pending;
  for (const auto& n : names) pending.push_back(std::async(std::launch::async, [n] { return run(n); }));
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::string format_text(const std::vector<Report>& reports) {
  std::string out;
  bool all = true;
  for (const auto& r : reports) {
    out += "== " + r.section + " ==\n";
    for (const auto& c : r.claims) {
      out += (c.pass ? "PASS  " : "FAIL  ") + c.description + "\n";
      for (const auto& d : c.details) {
        std::size_t start = 0;
        while (start <= d.size()) {
          auto nl = d.find('\n', start);
          if (nl == std::string::npos) nl = d.size();
          if (nl > start) out += "      " + d.substr(start, nl - start) + "\n";
          start = nl + 1;
        }
      }
    }
    out += r.section + ": " + (r.pass() ? "PASS" : "FAIL") + "\n\n";
    all = all && r.pass();
  }
  out += std::string("replay: ") + (all ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string format_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["section"] = r.section;
    s["pass"] = r.pass();
    s["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : r.claims) {
      s["claims"].push_back({{"description", c.description}, {"pass", c.pass}, {"details", c.details}});
    }
    j.push_back(s);
  }
  return j.dump(2) + "\n";
}

}  // namespace forge::replay
