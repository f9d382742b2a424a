#pragma once

#include <map>
#include <string>
#include <vector>

#include "forge/algebra.hpp"

namespace forge {

// Full multilinearization: a variable of multiplicity k is split into k fresh
// variables (name1, name2, ...), keeping only the component that uses each
// fresh variable once. The result is scaled to primitive integer coefficients
// with a positive leading term.
Identity polarize(const Identity& id);

// Clears denominators, divides by the content and makes the leading
// coefficient positive. Zero stays zero.
Polynomial normalize_scalar(const Polynomial& p);

// True iff a = c * b for some nonzero rational c (or both are zero).
bool proportional(const Polynomial& a, const Polynomial& b);

// pattern(slots...) -> replacement, where replacement is multilinear in slots.
struct RewriteRule {
  std::string name;
  OpSymbol pattern;
  std::vector<Variable> slots;
  Polynomial replacement;

  // `lhs` must be pattern applied to pairwise distinct variables.
  static RewriteRule make(std::string name, const Monomial& lhs, Polynomial replacement);
};

// Rewrites until no pattern symbol remains. An empty rule list is the
// identity. Throws forge::Error if the rules do not terminate.
Polynomial apply_rules(const Polynomial& p, const std::vector<RewriteRule>& rules);
Identity apply_rules(const Identity& id, const std::vector<RewriteRule>& rules);

Polynomial rename_ops(const Polynomial& p, const std::map<OpSymbol, OpSymbol>& renaming);
Identity rename_ops(const Identity& id, const std::map<OpSymbol, OpSymbol>& renaming);

}  // namespace forge
