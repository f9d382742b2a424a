#include "forge/rightcomm.hpp"

#include <algorithm>
#include <array>

#include "forge/rewrite.hpp"

namespace forge::rightcomm {

namespace {

int right_degree(const Monomial& m) { return m.args()[1].degree(); }

// Type order: leaf first; then by degree of the right factor, then the left
// shape, then the right shape.
std::strong_ordering shape_order(const Monomial& x, const Monomial& y) {
  if (auto c = x.degree() <=> y.degree(); c != 0) return c;
  if (x.is_leaf() || y.is_leaf()) {
    return static_cast<int>(!x.is_leaf()) <=> static_cast<int>(!y.is_leaf());
  }
  if (auto c = right_degree(x) <=> right_degree(y); c != 0) return c;
  if (auto c = shape_order(x.args()[0], y.args()[0]); c != 0) return c;
  return shape_order(x.args()[1], y.args()[1]);
}

// Order of the two factors inside a commutative product.
bool factor_before(const Monomial& x, const Monomial& y) {
  if (x.degree() != y.degree()) return x.degree() > y.degree();
  if (auto c = shape_order(x, y); c != 0) return c < 0;
  return x.leaves() < y.leaves();
}

// Everything below a right factor commutes.
Monomial canonical(const Monomial& m, bool commutative) {
  if (m.is_leaf()) return m;
  if (m.op().arity != 2) {
    throw Error("right-commutative words use a binary operation, found '" + m.op().display() + "'");
  }
  Monomial left = canonical(m.args()[0], commutative);
  Monomial right = canonical(m.args()[1], true);
  if (commutative && factor_before(right, left)) std::swap(left, right);
  return Monomial::apply(m.op(), {left, right});
}

std::vector<Monomial> compute_types(int degree) {
  std::vector<Monomial> out;
  for (const auto& s : consequence::enumerate_shapes({kMul}, degree)) {
    Monomial c = canonical(s, false);
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const Monomial& t) { return shape_order(t, c) == 0; });
    if (!seen) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return shape_order(a, b) < 0; });
  return out;
}

void format_into(std::string& out, const Monomial& m) {
  if (m.is_leaf()) {
    out += m.variable().name();
    return;
  }
  for (const auto& a : m.args()) {
    if (a.is_leaf()) {
      out += a.variable().name();
    } else {
      out += '(';
      format_into(out, a);
      out += ')';
    }
  }
}

Monomial with_op(const Monomial& m, const OpSymbol& op) {
  if (m.is_leaf()) return m;
  return Monomial::apply(op, {with_op(m.args()[0], op), with_op(m.args()[1], op)});
}

}  // namespace

const std::vector<Monomial>& association_types(int degree) {
  static const std::array<std::vector<Monomial>, kMaxDegree + 1> table = [] {
    std::array<std::vector<Monomial>, kMaxDegree + 1> t;
    for (int d = 1; d <= kMaxDegree; ++d) t[d] = compute_types(d);
    return t;
  }();
  if (degree < 1 || degree > kMaxDegree) {
    throw Error("right-commutative straightening supports degrees 1 to 5, got " +
                std::to_string(degree));
  }
  return table[degree];
}

RCWord rc_straighten(const Monomial& m) {
  const auto& types = association_types(m.degree());
  Monomial c = canonical(m, false);
  Monomial shape = with_op(c, kMul);
  auto it = std::lower_bound(types.begin(), types.end(), shape, [](const Monomial& a, const Monomial& b) {
    return shape_order(a, b) < 0;
  });
  if (it == types.end() || shape_order(*it, shape) != 0) throw Error("unclassified shape");
  return RCWord{m.degree(), static_cast<int>(it - types.begin()) + 1, c.leaves()};
}

RCPolynomial rc_expand(const Polynomial& p) {
  RCPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    RCWord w = rc_straighten(m);
    auto [it, inserted] = out.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

Monomial rc_monomial(const RCWord& w) {
  const auto& types = association_types(w.degree);
  if (w.type < 1 || w.type > static_cast<int>(types.size())) throw Error("bad association type");
  return consequence::fill_shape(types[w.type - 1], w.letters);
}

std::vector<int> symmetry_orders(int degree) {
  std::vector<int> out;
  auto base_letters = letters(degree);
  for (const auto& shape : association_types(degree)) {
    RCWord base = rc_straighten(consequence::fill_shape(shape, base_letters));
    auto perm = base_letters;
    int count = 0;
    do {
      if (rc_straighten(consequence::fill_shape(shape, perm)) == base) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.push_back(count);
  }
  return out;
}

std::vector<RCWord> rc_basis(const std::vector<Variable>& vars) {
  const int degree = static_cast<int>(vars.size());
  std::vector<RCWord> out;
  auto perm = vars;
  std::sort(perm.begin(), perm.end());
  do {
    for (const auto& shape : association_types(degree)) {
      out.push_back(rc_straighten(consequence::fill_shape(shape, perm)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial permuted_associator(const Polynomial& ternary) {
  std::vector<RewriteRule> rules;
  const Variable x("x"), y("y"), z("z");
  auto v = [](const Variable& w) { return Polynomial(Monomial::leaf(w)); };
  Polynomial replacement = mul(mul(v(x), v(z)), v(y)) - mul(v(x), mul(v(z), v(y)));
  for (const auto& op : ternary.operations()) {
    if (op.arity != 3) continue;
    rules.push_back(RewriteRule::make(
        "assoc", Monomial::apply(op, {Monomial::leaf(x), Monomial::leaf(y), Monomial::leaf(z)}),
        replacement));
  }
  return apply_rules(ternary, rules);
}

RCPolynomial permuted_associator_expand(const Identity& id) {
  if (!id.is_multilinear()) throw Error("identity '" + id.name + "' is not multilinear");
  return rc_expand(permuted_associator(id.lhs));
}

std::string format(const RCWord& w) {
  std::string out;
  format_into(out, rc_monomial(w));
  return out;
}

std::string format(const RCPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += format(w);
  }
  return out;
}

JordanSpan::JordanSpan(const Identity& rj, const Identity& ro,
                       const std::vector<std::string>& preferred) {
  auto vars = letters(kMaxDegree);
  auto gens = consequence::lifted_instances(rj, kMaxDegree, vars, 0);
  auto more = consequence::lifted_instances(ro, kMaxDegree, vars, 1);
  gens.insert(gens.end(), more.begin(), more.end());
  std::vector<consequence::Generator> ordered;
  std::vector<bool> used(gens.size(), false);
  for (const auto& label : preferred) {
    auto it = std::find_if(gens.begin(), gens.end(),
                           [&](const consequence::Generator& g) { return g.label == label; });
    if (it == gens.end()) throw Error("no lifted instance labelled '" + label + "'");
    auto k = static_cast<std::size_t>(it - gens.begin());
    if (!used[k]) {
      used[k] = true;
      ordered.push_back(*it);
    }
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!used[k]) ordered.push_back(std::move(gens[k]));
  }
  auto basis = rc_basis(vars);
  for (std::size_t i = 0; i < basis.size(); ++i) index_.emplace(basis[i], i);
  span_ = std::make_unique<consequence::InstanceSpan>(
      std::move(ordered), [this](const Polynomial& p) {
        std::map<std::size_t, Rational> entries;
        for (const auto& [w, c] : rc_expand(p)) entries[index_.at(w)] = c;
        return make_sparse(std::move(entries));
      });
}

consequence::SpanResult JordanSpan::express(const RCPolynomial& target) const {
  std::map<std::size_t, Rational> entries;
  for (const auto& [w, c] : target) {
    auto it = index_.find(w);
    if (it == index_.end()) throw Error("target word " + format(w) + " is not a degree-5 word in a..e");
    entries[it->second] = c;
  }
  return span_->express(make_sparse(std::move(entries)));
}

consequence::SpanResult jordan_reduces(const RCPolynomial& target, const Identity& rj,
                                       const Identity& ro,
                                       const std::vector<std::string>& preferred) {
  if (target.empty()) return consequence::SpanResult{true, {}, std::nullopt};
  return JordanSpan(rj, ro, preferred).express(target);
}

}  // namespace forge::rightcomm
