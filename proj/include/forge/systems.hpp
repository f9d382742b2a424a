#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "forge/algebra.hpp"
#include "forge/mpoly.hpp"
#include "forge/rational.hpp"

namespace forge::systems {

// <e_i,e_j,e_k> = sum_l at(i,j,k,l) e_l over scalars S (Rational or MPoly).
template <class S>
struct Ternary {
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<S> c;

  Ternary() = default;
  explicit Ternary(std::vector<std::string> names)
      : dim(static_cast<int>(names.size())), basis(std::move(names)) {
    if (dim < 1) throw Error("a triple system needs dimension at least 1");
    c.assign(static_cast<std::size_t>(dim) * dim * dim * dim, S(0));
  }

  S& at(int i, int j, int k, int l) { return c[index(i, j, k, l)]; }
  const S& at(int i, int j, int k, int l) const { return c[index(i, j, k, l)]; }

  std::vector<S> apply(const std::vector<S>& a, const std::vector<S>& b,
                       const std::vector<S>& x) const {
    std::vector<S> out(dim, S(0));
    for (int i = 0; i < dim; ++i) {
      if (a[i] == S(0)) continue;
      for (int j = 0; j < dim; ++j) {
        if (b[j] == S(0)) continue;
        S ab = a[i] * b[j];
        for (int k = 0; k < dim; ++k) {
          if (x[k] == S(0)) continue;
          S abx = ab * x[k];
          for (int l = 0; l < dim; ++l) {
            const S& coeff = at(i, j, k, l);
            if (coeff != S(0)) out[l] += abx * coeff;
          }
        }
      }
    }
    return out;
  }

  std::vector<S> unit(int i) const {
    std::vector<S> v(dim, S(0));
    v[i] = S(1);
    return v;
  }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l;
  }
};

using TernaryStructureConstants = Ternary<Rational>;

// Evaluates p, built from one ternary operation, with variable v sent to the
// coordinate vector values[v].
template <class S>
std::vector<S> evaluate(const Ternary<S>& t, const Monomial& m,
                        const std::map<Variable, std::vector<S>>& values) {
  if (m.is_leaf()) {
    auto it = values.find(m.variable());
    if (it == values.end()) throw Error("no value for variable '" + m.variable().name() + "'");
    return it->second;
  }
  if (m.op().arity != 3) throw Error("'" + m.op().display() + "' is not a ternary operation");
  auto args = m.args();
  return t.apply(evaluate(t, args[0], values), evaluate(t, args[1], values),
                 evaluate(t, args[2], values));
}

template <class S>
std::vector<S> evaluate(const Ternary<S>& t, const Polynomial& p,
                        const std::map<Variable, std::vector<S>>& values) {
  std::vector<S> out(t.dim, S(0));
  for (const auto& [m, coeff] : p.terms()) {
    auto v = evaluate(t, m, values);
    for (int l = 0; l < t.dim; ++l) out[l] += S(coeff) * v[l];
  }
  return out;
}

struct Violation {
  std::string identity;
  std::vector<int> tuple;  // basis indices, one per variable
};

struct CheckResult {
  bool ok = true;
  std::vector<Violation> violations;  // sorted by identity, then tuple
};

// Every identity on every basis tuple. Each identity must use a single
// ternary operation.
template <class S>
CheckResult check_identities(const Ternary<S>& t, const std::vector<Identity>& ids) {
  CheckResult result;
  for (const auto& id : ids) {
    const std::size_t nvars = id.variables.size();
    std::vector<int> tuple(nvars, 0);
    while (true) {
      std::map<Variable, std::vector<S>> values;
      for (std::size_t v = 0; v < nvars; ++v) values[id.variables[v]] = t.unit(tuple[v]);
      auto out = evaluate(t, id.lhs, values);
      for (const auto& s : out) {
        if (s != S(0)) {
          result.ok = false;
          result.violations.push_back({id.name, tuple});
          break;
        }
      }
      std::size_t k = nvars;
      while (k > 0) {
        if (++tuple[k - 1] < t.dim) break;
        tuple[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return result;
}

// LTS-A and LTS-B on all basis 5-tuples.
CheckResult check_lts(const TernaryStructureConstants& t);
CheckResult check_lts(const Ternary<MPoly>& t);
// The Lie triple identities skew, cyclic and derivation.
CheckResult lie_triple_check(const TernaryStructureConstants& t);

// Finite-dimensional algebra with one bilinear product.
struct BinaryAlgebra {
  int dim = 0;
  std::vector<std::string> basis;
  // table[i][j] = e_i . e_j
  std::vector<std::vector<std::vector<Rational>>> table;

  explicit BinaryAlgebra(std::vector<std::string> names);
  std::vector<Rational> product(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> unit(int i) const;
};

// U(T) = T + T(x)T on the basis e_1..e_n, then e_ie_j in row-major order.
BinaryAlgebra build_envelope(const TernaryStructureConstants& t);

// (ab)c - (ac)b - a(bc) on all basis triples.
CheckResult check_leibniz(const BinaryAlgebra& a);

// <a,b,c> = abc - bac - cab + cba in an associative algebra.
TernaryStructureConstants associator_system(const BinaryAlgebra& a);
// n x n matrices, or the upper-triangular ones, on the matrix units.
BinaryAlgebra matrix_algebra(int n, bool upper_triangular);

// Table in the layout of the printed envelope tables: rows act on columns,
// zero entries print as ".".
std::string table_text(const BinaryAlgebra& a);
std::string table_json(const BinaryAlgebra& a);
// "2(xy+yx)", "-y", "x^2", "."
std::string format_entry(const std::vector<Rational>& v, const std::vector<std::string>& names);
// Basis labels as printed in tables: x, y, x^2, xy, ...
std::vector<std::string> display_names(const BinaryAlgebra& a);

// {"dim": n, "basis": [...], "triple": {"x,y,x": "y", ...}}
TernaryStructureConstants parse_system_json(std::string_view text);
std::string system_json(const TernaryStructureConstants& t);

// Unknowns alpha_ijk / beta_ijk (the x / y coefficient of <e_i,e_j,e_k>) for
// n = 2; c<l>_ijk otherwise.
struct QuadraticSystem {
  int dim = 0;
  std::vector<std::string> unknowns;
  std::vector<MPoly> equations;
};

std::string unknown_name(int dim, int i, int j, int k, int l);
Ternary<MPoly> generic_system(int dim, const std::vector<std::string>& basis);
Ternary<MPoly> to_symbolic(const TernaryStructureConstants& t);

// LTS-A and LTS-B on every basis 5-tuple with symbolic structure constants;
// each nonzero coordinate, made primitive, is one equation. Sorted, unique.
QuadraticSystem lts_equations(int dim);

// The equations after substituting t's structure constants; all zero iff t
// satisfies the system.
std::vector<MPoly> residuals(const QuadraticSystem& q, const Ternary<MPoly>& t);
bool satisfies(const QuadraticSystem& q, const TernaryStructureConstants& t);

// Exhaustive search over F_p: unknowns in `mask` range over F_p, the others are
// zero. Solutions list the mask values in mask order, lexicographically.
std::vector<std::vector<std::int64_t>> search_fp(const QuadraticSystem& q, std::int64_t p,
                                                 const std::vector<std::string>& mask);

}  // namespace forge::systems
