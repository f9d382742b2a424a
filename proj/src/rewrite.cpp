#include "forge/rewrite.hpp"

#include <algorithm>

namespace forge {

Polynomial normalize_scalar(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (p.terms().begin()->second < 0) scale = -scale;
  return scale * p;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  Rational ratio = a.terms().begin()->second / b.terms().begin()->second;
  return a == ratio * b;
}

Identity polarize(const Identity& id) {
  std::map<Variable, int> multiplicity;
  for (const auto& [m, c] : id.lhs.terms()) {
    std::map<Variable, int> count;
    for (const auto& v : m.leaves()) ++count[v];
    for (const auto& [v, k] : count) multiplicity[v] = std::max(multiplicity[v], k);
  }
  std::set<Variable> taken = id.lhs.variables();
  Polynomial p = id.lhs;
  std::vector<Variable> vars;
  for (const auto& v : id.variables) {
    int k = multiplicity.count(v) ? multiplicity[v] : 1;
    if (k <= 1) {
      vars.push_back(v);
      continue;
    }
    std::vector<Variable> fresh;
    for (int i = 1; static_cast<int>(fresh.size()) < k; ++i) {
      Variable f(v.name() + std::to_string(i));
      if (taken.insert(f).second) fresh.push_back(f);
    }
    Assignment assignment;
    for (const auto& w : p.variables()) assignment[w] = Polynomial(Monomial::leaf(w));
    Polynomial sum;
    for (const auto& f : fresh) sum += Polynomial(Monomial::leaf(f));
    assignment[v] = sum;
    Polynomial expanded = substitute(p, assignment, SubstitutionCheck::kNone);
    Polynomial kept;
    for (const auto& [m, c] : expanded.terms()) {
      bool linear = true;
      for (const auto& f : fresh) {
        if (std::count(m.leaves().begin(), m.leaves().end(), f) != 1) {
          linear = false;
          break;
        }
      }
      if (linear) kept.add_term(m, c);
    }
    p = std::move(kept);
    vars.insert(vars.end(), fresh.begin(), fresh.end());
  }
  return Identity{id.name, normalize_scalar(p), vars};
}

RewriteRule RewriteRule::make(std::string name, const Monomial& lhs, Polynomial replacement) {
  if (lhs.is_leaf()) throw Error("rule '" + name + "': pattern must be an operation");
  std::vector<Variable> slots;
  for (const auto& a : lhs.args()) {
    if (!a.is_leaf()) throw Error("rule '" + name + "': pattern arguments must be variables");
    slots.push_back(a.variable());
  }
  std::set<Variable> distinct(slots.begin(), slots.end());
  if (distinct.size() != slots.size()) {
    throw Error("rule '" + name + "': pattern variables must be distinct");
  }
  for (const auto& v : replacement.variables()) {
    if (!distinct.count(v)) {
      throw Error("rule '" + name + "': replacement uses unbound variable '" + v.name() + "'");
    }
  }
  if (!replacement.is_zero() && !replacement.is_multilinear()) {
    throw Error("rule '" + name + "': replacement must be multilinear in the slots");
  }
  return RewriteRule{std::move(name), lhs.op(), std::move(slots), std::move(replacement)};
}

namespace {

Polynomial rewrite_once(const Monomial& m, const std::map<OpSymbol, const RewriteRule*>& rules) {
  if (m.is_leaf()) return Polynomial(m);
  std::vector<Polynomial> args;
  for (const auto& a : m.args()) args.push_back(rewrite_once(a, rules));
  auto it = rules.find(m.op());
  if (it == rules.end()) return apply_op(m.op(), args);
  const RewriteRule& rule = *it->second;
  Assignment assignment;
  for (std::size_t i = 0; i < args.size(); ++i) assignment[rule.slots[i]] = args[i];
  return substitute(rule.replacement, assignment, SubstitutionCheck::kNone);
}

bool mentions(const Polynomial& p, const std::map<OpSymbol, const RewriteRule*>& rules) {
  for (const auto& op : p.operations()) {
    if (rules.count(op)) return true;
  }
  return false;
}

}  // namespace

Polynomial apply_rules(const Polynomial& p, const std::vector<RewriteRule>& rules) {
  std::map<OpSymbol, const RewriteRule*> by_op;
  for (const auto& r : rules) {
    if (!by_op.emplace(r.pattern, &r).second) {
      throw Error("two rules rewrite '" + r.pattern.display() + "'");
    }
  }
  Polynomial current = p;
  // Each pass removes at least one layer of an acyclic rule chain.
  const std::size_t max_passes = rules.size() + 2;
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    if (!mentions(current, by_op)) return current;
    Polynomial next;
    for (const auto& [m, c] : current.terms()) next += c * rewrite_once(m, by_op);
    current = std::move(next);
  }
  if (mentions(current, by_op)) throw Error("rewrite rules do not terminate (cyclic rule set)");
  return current;
}

Identity apply_rules(const Identity& id, const std::vector<RewriteRule>& rules) {
  return Identity{id.name, apply_rules(id.lhs, rules), id.variables};
}

namespace {

Monomial rename_monomial(const Monomial& m, const std::map<OpSymbol, OpSymbol>& renaming) {
  if (m.is_leaf()) return m;
  std::vector<Monomial> args;
  for (const auto& a : m.args()) args.push_back(rename_monomial(a, renaming));
  auto it = renaming.find(m.op());
  const OpSymbol& op = it == renaming.end() ? m.op() : it->second;
  if (op.arity != m.op().arity) {
    throw Error("cannot rename '" + m.op().display() + "' to an operation of different arity");
  }
  return Monomial::apply(op, std::move(args));
}

}  // namespace

Polynomial rename_ops(const Polynomial& p, const std::map<OpSymbol, OpSymbol>& renaming) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(rename_monomial(m, renaming), c);
  return out;
}

Identity rename_ops(const Identity& id, const std::map<OpSymbol, OpSymbol>& renaming) {
  return Identity{id.name, rename_ops(id.lhs, renaming), id.variables};
}

}  // namespace forge
