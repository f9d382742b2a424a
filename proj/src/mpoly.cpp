#include "forge/mpoly.hpp"

#include "forge/algebra.hpp"

namespace forge {

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::unknown(const std::string& name) {
  MPoly p;
  p.terms_.emplace(Exponents{{name, 1}}, Rational(1));
  return p;
}

unsigned MPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned total = 0;
    for (const auto& [name, k] : e) total += k;
    d = std::max(d, total);
  }
  return d;
}

void MPoly::add(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  MPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (const auto& [name, k] : e2) e[name] += k;
      out.add(e, c1 * c2);
    }
  }
  *this = std::move(out);
  return *this;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& values) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    MPoly term(c);
    Exponents rest;
    for (const auto& [name, k] : e) {
      auto it = values.find(name);
      if (it == values.end()) {
        rest[name] = k;
        continue;
      }
      for (unsigned i = 0; i < k; ++i) term *= it->second;
    }
    MPoly symbolic;
    symbolic.terms_.emplace(rest, Rational(1));
    out += term * symbolic;
  }
  return out;
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (const auto& [name, k] : e) {
      auto it = values.find(name);
      if (it == values.end()) throw Error("no value for unknown '" + name + "'");
      for (unsigned i = 0; i < k; ++i) term *= it->second;
    }
    total += term;
  }
  return total;
}

MPoly MPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (terms_.rbegin()->second < 0) scale = -scale;
  return *this * MPoly(scale);
}

std::string MPoly::format() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  // Highest monomial first reads naturally for quadratic equations.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (const auto& [name, k] : e) {
      if (!mono.empty()) mono += '*';
      mono += name;
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace forge
