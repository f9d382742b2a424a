#include "forge/rational.hpp"

#include <cctype>

#include "forge/algebra.hpp"

namespace forge {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t end = digits(i);
  if (end == i) throw Error("malformed rational '" + std::string(text) + "'");
  mpz_class num(std::string(text.substr(i, end - i)));
  mpz_class den = 1;
  if (end < text.size()) {
    if (text[end] != '/') throw Error("malformed rational '" + std::string(text) + "'");
    std::size_t dend = digits(end + 1);
    if (dend == end + 1 || dend != text.size())
      throw Error("malformed rational '" + std::string(text) + "'");
    den = mpz_class(std::string(text.substr(end + 1)));
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace forge
