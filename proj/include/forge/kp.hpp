#pragma once

#include <set>
#include <vector>

#include "forge/algebra.hpp"

namespace forge::kp {

struct VarietyPresentation {
  std::set<OpSymbol> signature;
  std::vector<Identity> identities;
};

struct KPOutput {
  // part1[s] holds the d identities produced from source identity s, one per
  // central indeterminate.
  std::vector<std::vector<Identity>> part1;
  std::vector<Identity> part2;
  // The variant operations op_1 .. op_n of every source operation.
  std::set<OpSymbol> signature;

  std::vector<Identity> part1_flat() const;
  std::vector<Identity> all() const;
};

// Re-subscripts every operation for each choice of central indeterminate.
// Output i is named <name><i+1>.
std::vector<Identity> kp_part1(const Identity& id);

// Interchange identities op_j(.., op_1(..), ..) - op_j(.., op_l(..), ..) for
// argument i != j and l != 1, ordered by (j, i, l); named bar.<j>.<i>.<a|b|..>.
std::vector<Identity> kp_part2(const OpSymbol& op);
// Every pair (k, l) with k != l.
std::vector<Identity> kp_part2_full(const OpSymbol& op);

KPOutput kp_apply(const VarietyPresentation& v);

}  // namespace forge::kp
