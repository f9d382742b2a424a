#pragma once

#include <map>
#include <string>
#include <vector>

#include "forge/algebra.hpp"

namespace forge::leibniz {

// v1 v2 ... vm stands for the left-normalized product ((v1 v2) ...) vm.
using TensorWord = std::vector<Variable>;
using TensorPolynomial = std::map<TensorWord, Rational>;

void add_term(TensorPolynomial& p, const TensorWord& w, const Rational& c);
TensorPolynomial word(const TensorWord& w);
TensorPolynomial word(const std::string& letters);  // "abc" -> a b c
TensorPolynomial operator+(TensorPolynomial a, const TensorPolynomial& b);
TensorPolynomial operator-(TensorPolynomial a, const TensorPolynomial& b);
TensorPolynomial operator*(const Rational& c, TensorPolynomial a);

enum class LetterCheck { kDisjoint, kNone };

// The Leibniz product of the free algebra: w.x = wx and
// w.(Y z) = (w.Y) z - (w z).Y. Under kDisjoint the factors may not share a
// letter.
TensorPolynomial free_product(const TensorPolynomial& u, const TensorPolynomial& v,
                              LetterCheck check = LetterCheck::kDisjoint);

// Trees over one binary operation, every node read as the Leibniz product.
TensorPolynomial expand_binary_tree(const Monomial& m);
TensorPolynomial expand_binary_tree(const Polynomial& p);

// Trees over one ternary operation, every node <x,y,z> read as (x.y).z.
TensorPolynomial expand_ternary(const Monomial& m);
TensorPolynomial expand_ternary(const Polynomial& p);

// True iff the identity holds for the iterated bracket of every Leibniz
// algebra.
bool holds_in_free(const Identity& id);

// "abcd - acbd"; letters are separated by '.' when a name is longer than one
// character.
std::string format(const TensorPolynomial& p);

}  // namespace forge::leibniz
