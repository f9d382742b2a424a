#include "forge/leibniz_free.hpp"

#include <algorithm>

namespace forge::leibniz {

void add_term(TensorPolynomial& p, const TensorWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) p.erase(it);
}

TensorPolynomial word(const TensorWord& w) {
  if (w.empty()) throw Error("tensor words are nonempty");
  return {{w, Rational(1)}};
}

TensorPolynomial word(const std::string& letters) {
  TensorWord w;
  for (char ch : letters) w.emplace_back(std::string(1, ch));
  return word(w);
}

TensorPolynomial operator+(TensorPolynomial a, const TensorPolynomial& b) {
  for (const auto& [w, c] : b) add_term(a, w, c);
  return a;
}

TensorPolynomial operator-(TensorPolynomial a, const TensorPolynomial& b) {
  for (const auto& [w, c] : b) add_term(a, w, -c);
  return a;
}

TensorPolynomial operator*(const Rational& c, TensorPolynomial a) {
  if (c == 0) return {};
  for (auto& [w, coeff] : a) coeff *= c;
  return a;
}

namespace {

// w . v for single words, accumulated into out with factor c.
void word_product(const TensorWord& w, const TensorWord& v, std::size_t v_len, const Rational& c,
                  TensorPolynomial& out) {
  if (v_len == 1) {
    TensorWord r = w;
    r.push_back(v[0]);
    add_term(out, r, c);
    return;
  }
  const Variable& z = v[v_len - 1];
  // (w . Y) z
  TensorPolynomial first;
  word_product(w, v, v_len - 1, Rational(1), first);
  for (const auto& [u, k] : first) {
    TensorWord r = u;
    r.push_back(z);
    add_term(out, r, c * k);
  }
  // - (w z) . Y
  TensorWord wz = w;
  wz.push_back(z);
  word_product(wz, v, v_len - 1, -c, out);
}

void check_disjoint(const TensorPolynomial& u, const TensorPolynomial& v) {
  std::vector<Variable> left;
  for (const auto& [w, c] : u) left.insert(left.end(), w.begin(), w.end());
  std::sort(left.begin(), left.end());
  for (const auto& [w, c] : v) {
    for (const auto& x : w) {
      if (std::binary_search(left.begin(), left.end(), x)) {
        throw Error("letter '" + x.name() + "' occurs in both factors");
      }
    }
  }
}

TensorPolynomial expand(const Monomial& m, int arity) {
  if (m.is_leaf()) return word(TensorWord{m.variable()});
  if (m.op().arity != arity) {
    throw Error("operation '" + m.op().display() + "' does not have arity " +
                std::to_string(arity));
  }
  auto args = m.args();
  TensorPolynomial acc = expand(args[0], arity);
  for (std::size_t k = 1; k < args.size(); ++k) {
    acc = free_product(acc, expand(args[k], arity), LetterCheck::kNone);
  }
  return acc;
}

TensorPolynomial expand_all(const Polynomial& p, int arity) {
  TensorPolynomial out;
  for (const auto& [m, c] : p.terms()) out = out + c * expand(m, arity);
  return out;
}

}  // namespace

TensorPolynomial free_product(const TensorPolynomial& u, const TensorPolynomial& v,
                              LetterCheck check) {
  if (check == LetterCheck::kDisjoint) check_disjoint(u, v);
  TensorPolynomial out;
  for (const auto& [w, a] : u) {
    for (const auto& [x, b] : v) word_product(w, x, x.size(), a * b, out);
  }
  return out;
}

TensorPolynomial expand_binary_tree(const Monomial& m) { return expand(m, 2); }
TensorPolynomial expand_binary_tree(const Polynomial& p) { return expand_all(p, 2); }
TensorPolynomial expand_ternary(const Monomial& m) { return expand(m, 3); }
TensorPolynomial expand_ternary(const Polynomial& p) { return expand_all(p, 3); }

bool holds_in_free(const Identity& id) {
  if (!id.is_multilinear()) throw Error("identity '" + id.name + "' is not multilinear");
  return expand_ternary(id.lhs).empty();
}

std::string format(const TensorPolynomial& p) {
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
    bool dotted = std::any_of(w.begin(), w.end(), [](const Variable& x) { return x.name().size() > 1; });
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (dotted && i) out += '.';
      out += w[i].name();
    }
  }
  return out;
}

}  // namespace forge::leibniz
