#include "forge/algebra.hpp"

#include <algorithm>

namespace forge {

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw Error("variable names must be nonempty");
}

std::string OpSymbol::display() const {
  return variant == 0 ? name : name + "_" + std::to_string(variant);
}

struct Monomial::Node {
  bool leaf = true;
  Variable var;
  OpSymbol op;
  std::vector<Monomial> args;
  std::vector<Variable> leaves;
};

Monomial Monomial::leaf(Variable v) {
  auto node = std::make_shared<Node>();
  node->leaf = true;
  node->leaves = {v};
  node->var = std::move(v);
  return Monomial(std::move(node));
}

Monomial Monomial::apply(OpSymbol op, std::vector<Monomial> args) {
  if (op.arity <= 0) throw Error("operation '" + op.display() + "' must have positive arity");
  if (static_cast<int>(args.size()) != op.arity) {
    throw Error("operation '" + op.display() + "' expects " + std::to_string(op.arity) +
                " arguments, got " + std::to_string(args.size()));
  }
  auto node = std::make_shared<Node>();
  node->leaf = false;
  for (const auto& a : args) {
    node->leaves.insert(node->leaves.end(), a.leaves().begin(), a.leaves().end());
  }
  node->op = std::move(op);
  node->args = std::move(args);
  return Monomial(std::move(node));
}

bool Monomial::is_leaf() const noexcept { return node_->leaf; }

const Variable& Monomial::variable() const {
  if (!node_->leaf) throw Error("monomial is not a leaf");
  return node_->var;
}

const OpSymbol& Monomial::op() const {
  if (node_->leaf) throw Error("monomial is a leaf");
  return node_->op;
}

std::span<const Monomial> Monomial::args() const noexcept { return node_->args; }

int Monomial::degree() const noexcept { return static_cast<int>(node_->leaves.size()); }

const std::vector<Variable>& Monomial::leaves() const noexcept { return node_->leaves; }

bool Monomial::is_multilinear() const {
  std::vector<Variable> sorted = leaves();
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::set<OpSymbol> Monomial::operations() const {
  std::set<OpSymbol> out;
  if (is_leaf()) return out;
  out.insert(op());
  for (const auto& a : args()) out.merge(a.operations());
  return out;
}

std::strong_ordering compare_shape(const Monomial& a, const Monomial& b) {
  if (a.is_leaf() || b.is_leaf()) {
    return static_cast<int>(!a.is_leaf()) <=> static_cast<int>(!b.is_leaf());
  }
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  auto aa = a.args();
  auto ba = b.args();
  for (std::size_t i = 0; i < aa.size(); ++i) {
    if (auto c = compare_shape(aa[i], ba[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = compare_shape(a, b); c != 0) return c;
  return a.leaves() <=> b.leaves();
}

bool operator==(const Monomial& a, const Monomial& b) { return (a <=> b) == 0; }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(const std::string& name) {
  return Polynomial(Monomial::leaf(Variable(name)));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> out;
  for (const auto& [m, c] : terms_) out.insert(m.leaves().begin(), m.leaves().end());
  return out;
}

std::set<OpSymbol> Polynomial::operations() const {
  std::set<OpSymbol> out;
  for (const auto& [m, c] : terms_) out.merge(m.operations());
  return out;
}

bool Polynomial::is_multilinear() const {
  std::vector<Variable> reference;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::vector<Variable> sorted = m.leaves();
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (first) {
      reference = std::move(sorted);
      first = false;
    } else if (sorted != reference) {
      return false;
    }
  }
  return true;
}

Polynomial apply_op(const OpSymbol& op, const std::vector<Polynomial>& args) {
  if (static_cast<int>(args.size()) != op.arity) {
    throw Error("operation '" + op.display() + "' expects " + std::to_string(op.arity) +
                " arguments, got " + std::to_string(args.size()));
  }
  Polynomial out;
  for (const auto& a : args) {
    if (a.is_zero()) return out;
  }
  // Odometer over one term per argument.
  std::vector<Polynomial::Terms::const_iterator> pos;
  for (const auto& a : args) pos.push_back(a.terms().begin());
  while (true) {
    std::vector<Monomial> children;
    Rational coeff = 1;
    for (const auto& it : pos) {
      children.push_back(it->first);
      coeff *= it->second;
    }
    out.add_term(Monomial::apply(op, std::move(children)), coeff);
    std::size_t k = 0;
    for (; k < pos.size(); ++k) {
      if (++pos[k] != args[k].terms().end()) break;
      pos[k] = args[k].terms().begin();
    }
    if (k == pos.size()) break;
  }
  return out;
}

namespace {

Polynomial substitute_monomial(const Monomial& m, const Assignment& assignment) {
  if (m.is_leaf()) {
    auto it = assignment.find(m.variable());
    if (it == assignment.end()) {
      throw Error("no value assigned to variable '" + m.variable().name() + "'");
    }
    return it->second;
  }
  std::vector<Polynomial> args;
  for (const auto& a : m.args()) args.push_back(substitute_monomial(a, assignment));
  return apply_op(m.op(), args);
}

}  // namespace

Polynomial substitute(const Polynomial& p, const Assignment& assignment,
                      SubstitutionCheck check) {
  if (check == SubstitutionCheck::kDisjoint) {
    std::set<Variable> seen;
    for (const auto& v : p.variables()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw Error("no value assigned to variable '" + v.name() + "'");
      for (const auto& w : it->second.variables()) {
        if (!seen.insert(w).second) {
          throw Error("assignment values share variable '" + w.name() + "'");
        }
      }
    }
  }
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out += c * substitute_monomial(m, assignment);
  return out;
}

Identity Identity::from(std::string name, Polynomial lhs) {
  auto vars = lhs.variables();
  return Identity{std::move(name), std::move(lhs), {vars.begin(), vars.end()}};
}

bool Identity::is_multilinear() const {
  if (!lhs.is_multilinear()) return false;
  if (lhs.is_zero()) return true;
  auto used = lhs.variables();
  std::set<Variable> listed(variables.begin(), variables.end());
  return listed.size() == variables.size() && listed == used;
}

Polynomial Identity::instantiate(const std::vector<Polynomial>& args) const {
  if (args.size() != variables.size()) {
    throw Error("identity '" + name + "' takes " + std::to_string(variables.size()) +
                " arguments, got " + std::to_string(args.size()));
  }
  Assignment assignment;
  for (std::size_t i = 0; i < args.size(); ++i) assignment[variables[i]] = args[i];
  return substitute(lhs, assignment);
}

Polynomial Identity::relabel(const std::vector<Variable>& vars) const {
  std::vector<Polynomial> args;
  for (const auto& v : vars) args.emplace_back(Monomial::leaf(v));
  return instantiate(args);
}

std::vector<Variable> letters(int count) {
  std::vector<Variable> out;
  for (int i = 0; i < count; ++i) {
    out.emplace_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                            : "v" + std::to_string(i + 1));
  }
  return out;
}

}  // namespace forge
