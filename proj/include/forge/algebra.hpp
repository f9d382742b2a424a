#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/rational.hpp"

namespace forge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Variable {
 public:
  Variable() = default;
  explicit Variable(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;

 private:
  std::string name_;
};

// (name, arity, variant) identifies a symbol. variant 0 is the plain operation;
// variants 1..arity are the subscripted copies produced by the dialgebra
// construction.
struct OpSymbol {
  std::string name;
  int arity = 0;
  int variant = 0;

  std::string display() const;

  friend auto operator<=>(const OpSymbol&, const OpSymbol&) = default;
  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

// The infix '*' of the expression grammar.
inline const OpSymbol kMul{"mul", 2, 0};

// Planar operation tree with variables at the leaves. Immutable; copies share
// structure.
class Monomial {
 public:
  static Monomial leaf(Variable v);
  static Monomial apply(OpSymbol op, std::vector<Monomial> args);

  bool is_leaf() const noexcept;
  const Variable& variable() const;
  const OpSymbol& op() const;
  std::span<const Monomial> args() const noexcept;

  int degree() const noexcept;
  // Leaf variables read left to right.
  const std::vector<Variable>& leaves() const noexcept;
  bool is_multilinear() const;
  std::set<OpSymbol> operations() const;

  // Shape first (leaf < apply, then OpSymbol, then children left to right),
  // then the leaf sequence.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  struct Node;
  explicit Monomial(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Compares only the operation-tree shapes, ignoring leaf labels.
std::strong_ordering compare_shape(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(const std::string& name);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Largest monomial degree; 0 for the zero polynomial.
  int degree() const;
  std::set<Variable> variables() const;
  std::set<OpSymbol> operations() const;
  // Every monomial uses the same variable set, each variable exactly once.
  bool is_multilinear() const;

 private:
  Terms terms_;
};

// op(p1, ..., pn) extended multilinearly.
Polynomial apply_op(const OpSymbol& op, const std::vector<Polynomial>& args);
inline Polynomial mul(const Polynomial& a, const Polynomial& b) {
  return apply_op(kMul, {a, b});
}

using Assignment = std::map<Variable, Polynomial>;

enum class SubstitutionCheck {
  // Values of distinct variables must have disjoint variable sets.
  kDisjoint,
  // Anything goes, e.g. identifying two variables.
  kNone,
};

// Replaces every leaf by its assigned polynomial and expands by
// distributivity. Throws forge::Error on an unassigned variable, or on
// clashing value variables under kDisjoint.
Polynomial substitute(const Polynomial& p, const Assignment& assignment,
                      SubstitutionCheck check = SubstitutionCheck::kDisjoint);

// A polynomial asserted to vanish identically.
struct Identity {
  std::string name;
  Polynomial lhs;
  std::vector<Variable> variables;

  // Variables are taken from the polynomial in name order.
  static Identity from(std::string name, Polynomial lhs);

  int degree() const { return lhs.degree(); }
  bool is_multilinear() const;
  std::set<OpSymbol> signature() const { return lhs.operations(); }

  // Positional substitution: variables[i] -> args[i].
  Polynomial instantiate(const std::vector<Polynomial>& args) const;
  Polynomial relabel(const std::vector<Variable>& vars) const;
};

// Standard letters a, b, c, ... (then v27, v28, ... beyond z).
std::vector<Variable> letters(int count);

}  // namespace forge
