#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "forge/algebra.hpp"
#include "forge/consequence.hpp"

namespace forge::rightcomm {

constexpr int kMaxDegree = 5;

// A straightened monomial of the free right-commutative algebra: association
// type (1-based, in the standard order for its degree) and the letters at the
// leaves of the canonical orbit representative.
struct RCWord {
  int degree = 0;
  int type = 0;
  std::vector<Variable> letters;

  friend auto operator<=>(const RCWord&, const RCWord&) = default;
  friend bool operator==(const RCWord&, const RCWord&) = default;
};

using RCPolynomial = std::map<RCWord, Rational>;

// Canonical association types of a degree (leaves labelled "_"), in order.
const std::vector<Monomial>& association_types(int degree);
// |symmetry group| of each type, computed by orbit closure.
std::vector<int> symmetry_orders(int degree);

RCWord rc_straighten(const Monomial& m);
RCPolynomial rc_expand(const Polynomial& p);
Monomial rc_monomial(const RCWord& w);

// Every canonical multilinear word in the given letters.
std::vector<RCWord> rc_basis(const std::vector<Variable>& vars);

// <x,y,z> -> (x,z,y) = (xz)y - x(zy) for the identity's ternary operation.
Polynomial permuted_associator(const Polynomial& ternary);
RCPolynomial permuted_associator_expand(const Identity& id);

// "(((ac)b)e)d"
std::string format(const RCWord& w);
std::string format(const RCPolynomial& p);

// The span of all one-degree liftings of RJ and RO at degree 5, inside the
// straightened degree-5 space. Generators whose labels are listed in
// `preferred` are placed first, so a target in their span gets a certificate
// over them alone.
class JordanSpan {
 public:
  JordanSpan(const Identity& rj, const Identity& ro, const std::vector<std::string>& preferred = {});
  JordanSpan(const JordanSpan&) = delete;
  JordanSpan& operator=(const JordanSpan&) = delete;

  consequence::SpanResult express(const RCPolynomial& target) const;
  std::size_t rank() const { return span_->rank(); }
  std::size_t generators() const { return span_->generators().size(); }

 private:
  std::map<RCWord, std::size_t> index_;
  std::unique_ptr<consequence::InstanceSpan> span_;
};

consequence::SpanResult jordan_reduces(const RCPolynomial& target, const Identity& rj,
                                       const Identity& ro,
                                       const std::vector<std::string>& preferred = {});

}  // namespace forge::rightcomm
