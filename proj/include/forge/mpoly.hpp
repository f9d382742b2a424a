#pragma once

#include <map>
#include <string>

#include "forge/rational.hpp"

namespace forge {

// Commutative polynomial in named unknowns with rational coefficients.
class MPoly {
 public:
  using Exponents = std::map<std::string, unsigned>;
  using Terms = std::map<Exponents, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT
  static MPoly unknown(const std::string& name);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= MPoly(-1); }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend bool operator==(const MPoly&, const MPoly&) = default;
  friend auto operator<=>(const MPoly& a, const MPoly& b) { return a.terms_ <=> b.terms_; }

  // Replaces the given unknowns; others stay symbolic.
  MPoly substitute(const std::map<std::string, MPoly>& values) const;
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  // Divides by the content and makes the leading coefficient positive.
  MPoly primitive() const;

  // "2*alpha_111*beta_122 - zeta^2"
  std::string format() const;

 private:
  void add(const Exponents& e, const Rational& c);
  Terms terms_;
};

}  // namespace forge
