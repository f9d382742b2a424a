#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "forge/rational.hpp"

namespace forge {

// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector make_sparse(std::map<std::size_t, Rational> entries);
// r -= f * p
void subtract_scaled(SparseVector& r, const SparseVector& p, const Rational& f);
void scale(SparseVector& r, const Rational& f);

// Incremental row echelon form over Q. Every pivot row remembers how it was
// built from the generators, so membership and dependency certificates can
// be rebuilt in generator coordinates on demand.
class EchelonSpan {
 public:
  // Returns true iff v was independent of the generators added so far.
  bool add(const SparseVector& v);

  std::size_t generators() const noexcept { return generator_count_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  struct Membership {
    bool member = false;
    // Leading column of the unmatched residual when not a member.
    std::optional<std::size_t> witness;
    // target = sum combination[g] * generator g (members only).
    std::map<std::size_t, Rational> combination;
  };
  Membership express(const SparseVector& target) const;

  // One relation sum c_g * generator_g = 0 per generator that was dependent
  // on its predecessors.
  std::vector<std::map<std::size_t, Rational>> dependencies() const;

 private:
  struct Pivot {
    SparseVector row;  // leading coefficient 1
    std::size_t generator = 0;
    Rational inverse_lead;
    std::vector<std::pair<std::size_t, Rational>> ops;  // row_raw = gen - sum f * pivot
  };
  struct Reduced {
    SparseVector residual;
    std::vector<std::pair<std::size_t, Rational>> ops;
  };
  Reduced reduce(SparseVector v) const;
  std::map<std::size_t, Rational> back_substitute(
      const std::vector<std::pair<std::size_t, Rational>>& ops) const;

  std::vector<Pivot> pivots_;
  std::map<std::size_t, std::size_t> pivot_of_column_;
  struct Dependent {
    std::size_t generator;
    std::vector<std::pair<std::size_t, Rational>> ops;
  };
  std::vector<Dependent> dependent_;
  std::size_t generator_count_ = 0;
};

// Reduced row echelon basis of the row space, ordered by pivot column.
std::vector<SparseVector> reduced_echelon(const std::vector<SparseVector>& rows);

}  // namespace forge
