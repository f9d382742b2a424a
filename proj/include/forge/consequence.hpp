#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/algebra.hpp"
#include "forge/linalg.hpp"

namespace forge::consequence {

// All multilinear monomials of one degree in the given variables, sorted in
// the monomial order.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(std::vector<OpSymbol> signature, int degree, std::vector<Variable> vars,
                std::vector<Monomial> monomials);

  const std::vector<OpSymbol>& signature() const noexcept { return signature_; }
  int degree() const noexcept { return degree_; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }

  std::optional<std::size_t> index(const Monomial& m) const;
  // Throws forge::Error if p has a monomial outside the basis.
  SparseVector coordinates(const Polynomial& p) const;
  Polynomial polynomial(const SparseVector& v) const;

 private:
  std::vector<OpSymbol> signature_;
  int degree_ = 0;
  std::vector<Variable> vars_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

// Every tree shape with `degree` leaves (leaves labelled "_").
std::vector<Monomial> enumerate_shapes(const std::vector<OpSymbol>& signature, int degree);
// Replaces the leaves of `shape` left to right by `labels`.
Monomial fill_shape(const Monomial& shape, const std::vector<Variable>& labels);

MonomialBasis enumerate_basis(const std::vector<OpSymbol>& signature, int degree,
                              const std::vector<Variable>& vars);

// One consequence of an identity together with how it was obtained.
struct Generator {
  std::string label;   // e.g. "RJ(c*e,b,d,a)" or "RO(a,b,c,e)*d"
  std::size_t source;  // index of the identity in the input list
  Polynomial value;
};

// Bijective relabelings of id's variables by vars (degree! of them), the
// identity relabeling first.
std::vector<Generator> same_degree_instances(const Identity& id, const std::vector<Variable>& vars,
                                             std::size_t source = 0);

// Relabelings lifted by one degree: a product of two letters substituted for
// one variable, or the instance multiplied by a letter on either side.
// Requires a single binary operation and target_degree == degree + 1.
std::vector<Generator> lifted_instances(const Identity& id, int target_degree,
                                        const std::vector<Variable>& vars,
                                        std::size_t source = 0);

std::vector<Generator> all_instances(const std::vector<Identity>& ids,
                                     const std::vector<Variable>& vars);

struct SpanCertificate {
  struct Term {
    std::size_t generator;
    std::string label;
    Rational coefficient;
    Polynomial value;
  };
  std::vector<Term> terms;

  Polynomial expand() const;
  Rational coefficient_of(const std::string& label) const;
  // "label - 2*label + ..." in generator order; "0" when empty.
  std::string format() const;
};

struct SpanResult {
  bool member = false;
  SpanCertificate certificate;       // members
  std::optional<std::size_t> witness;  // coordinate index, non-members
};

// The span of a generator list inside a fixed coordinate space.
class InstanceSpan {
 public:
  using Coordinates = std::function<SparseVector(const Polynomial&)>;

  InstanceSpan(std::vector<Generator> generators, Coordinates coordinates);

  SpanResult express(const SparseVector& target) const;
  SpanResult express(const Polynomial& target) const;

  std::size_t rank() const noexcept { return span_.rank(); }
  const std::vector<Generator>& generators() const noexcept { return generators_; }

 private:
  std::vector<Generator> generators_;
  Coordinates coordinates_;
  EchelonSpan span_;
};

// target in span(generators), coordinates taken in `basis`. The witness is a
// basis index.
SpanResult in_span(const Polynomial& target, const std::vector<Generator>& generators,
                   const MonomialBasis& basis);

struct Equivalence {
  bool equivalent = false;
  // b_in_a[i]: identity i of B against the instances of A, and vice versa.
  std::vector<SpanResult> b_in_a;
  std::vector<SpanResult> a_in_b;
};

// The instance spans are closed under relabeling, so it suffices to place each
// identity of one side in the instance span of the other.
Equivalence sets_equivalent(const std::vector<Identity>& a, const std::vector<Identity>& b,
                            int degree, const std::vector<Variable>& vars);

// Reduced echelon basis of the kernel of the linear map sending basis
// monomial m to expand(m), a map from arbitrary keys to coefficients.
template <class Expand>
std::vector<Polynomial> kernel_of_expansion(const MonomialBasis& basis, Expand expand) {
  using Image = decltype(expand(basis.monomials().front()));
  using Key = typename Image::key_type;
  std::map<Key, std::size_t> column;
  EchelonSpan span;
  for (const auto& m : basis.monomials()) {
    std::map<std::size_t, Rational> row;
    for (const auto& [key, c] : expand(m)) {
      auto [it, inserted] = column.try_emplace(key, column.size());
      row[it->second] += c;
    }
    span.add(make_sparse(std::move(row)));
  }
  std::vector<SparseVector> relations;
  for (auto& dep : span.dependencies()) relations.push_back(make_sparse(std::move(dep)));
  std::vector<Polynomial> out;
  for (const auto& r : reduced_echelon(relations)) out.push_back(basis.polynomial(r));
  return out;
}

}  // namespace forge::consequence
