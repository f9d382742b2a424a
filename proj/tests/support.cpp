#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "forge/consequence.hpp"
#include "forge/rightcomm.hpp"

namespace forge::props {

using leibniz::TensorPolynomial;
using leibniz::TensorWord;

void Tally::record(bool ok, const std::string& what) {
  ++trials;
  if (ok) return;
  ++failures;
  if (first_failures.size() < 5) first_failures.push_back(what);
}

namespace {

TensorPolynomial random_element(const std::vector<Variable>& letters, std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  TensorPolynomial out;
  TensorWord w = letters;
  int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    std::shuffle(w.begin(), w.end(), rng);
    int c = 0;
    while (c == 0) c = coeff(rng);
    leibniz::add_term(out, w, Rational(c));
  }
  if (out.empty()) leibniz::add_term(out, letters, Rational(1));
  return out;
}

std::vector<Monomial> neighbours(const Monomial& m) {
  std::vector<Monomial> out;
  if (m.is_leaf()) return out;
  auto args = m.args();
  const Monomial& l = args[0];
  const Monomial& r = args[1];
  if (!r.is_leaf()) {
    auto inner = r.args();
    out.push_back(Monomial::apply(m.op(), {l, Monomial::apply(r.op(), {inner[1], inner[0]})}));
  }
  for (const auto& n : neighbours(l)) out.push_back(Monomial::apply(m.op(), {n, r}));
  for (const auto& n : neighbours(r)) out.push_back(Monomial::apply(m.op(), {l, n}));
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Tally leibniz_law_trials(int trials, std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto pool = letters(6);
  Tally tally;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> total(3, 6);
    int n = total(rng);
    // Split n letters into three nonempty blocks.
    std::uniform_int_distribution<int> cut1(1, n - 2);
    int du = cut1(rng);
    std::uniform_int_distribution<int> cut2(1, n - du - 1);
    int dv = cut2(rng);
    std::vector<Variable> letters_used(pool.begin(), pool.begin() + n);
    std::shuffle(letters_used.begin(), letters_used.end(), rng);
    std::vector<Variable> lu(letters_used.begin(), letters_used.begin() + du);
    std::vector<Variable> lv(letters_used.begin() + du, letters_used.begin() + du + dv);
    std::vector<Variable> lw(letters_used.begin() + du + dv, letters_used.end());
    auto u = random_element(lu, rng);
    auto v = random_element(lv, rng);
    auto w = random_element(lw, rng);
    using leibniz::free_product;
    using leibniz::operator-;
    auto lhs = free_product(u, free_product(v, w));
    auto rhs = free_product(free_product(u, v), w) - free_product(free_product(u, w), v);
    tally.record(lhs == rhs, "u=" + leibniz::format(u) + " v=" + leibniz::format(v) +
                                 " w=" + leibniz::format(w));
  }
  return tally;
}

OrbitReport straightening_orbit_check() {
  OrbitReport report;
  auto vars = letters(5);
  std::vector<Monomial> trees;
  for (const auto& shape : consequence::enumerate_shapes({kMul}, 5)) {
    std::vector<Variable> perm = vars;
    do {
      trees.push_back(consequence::fill_shape(shape, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < trees.size(); ++i) index.emplace(trees[i], i);
  UnionFind uf(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (const auto& n : neighbours(trees[i])) uf.unite(i, index.at(n));
  }
  std::map<std::size_t, rightcomm::RCWord> word_of_orbit;
  std::map<rightcomm::RCWord, std::size_t> orbit_of_word;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto w = rightcomm::rc_straighten(trees[i]);
    std::size_t root = uf.find(i);
    auto [it, fresh] = word_of_orbit.try_emplace(root, w);
    report.tally.record(fresh || it->second == w, "orbit member " + rightcomm::format(w) +
                                                      " differs from " + rightcomm::format(it->second));
    auto [jt, fresh_word] = orbit_of_word.try_emplace(w, root);
    report.tally.record(fresh_word || jt->second == root,
                        "word " + rightcomm::format(w) + " shared by two orbits");
    report.tally.record(rightcomm::rc_straighten(rightcomm::rc_monomial(w)) == w,
                        "straightening is not idempotent on " + rightcomm::format(w));
  }
  report.labelled_trees = trees.size();
  report.orbits = word_of_orbit.size();
  report.words = orbit_of_word.size();
  return report;
}

TensorPolynomial rewrite_normal_form(const Monomial& m) {
  if (m.is_leaf()) return leibniz::word(TensorWord{m.variable()});
  auto args = m.args();
  const Monomial& x = args[0];
  const Monomial& r = args[1];
  if (r.is_leaf()) {
    TensorPolynomial out;
    for (const auto& [w, c] : rewrite_normal_form(x)) {
      TensorWord longer = w;
      longer.push_back(r.variable());
      leibniz::add_term(out, longer, c);
    }
    return out;
  }
  auto inner = r.args();
  const OpSymbol& op = m.op();
  // x(yz) -> (xy)z - (xz)y
  Monomial first = Monomial::apply(op, {Monomial::apply(op, {x, inner[0]}), inner[1]});
  Monomial second = Monomial::apply(op, {Monomial::apply(op, {x, inner[1]}), inner[0]});
  using leibniz::operator-;
  return rewrite_normal_form(first) - rewrite_normal_form(second);
}

Monomial random_tree(std::vector<Variable> leaves, std::mt19937& rng) {
  if (leaves.size() == 1) return Monomial::leaf(leaves[0]);
  std::uniform_int_distribution<std::size_t> cut(1, leaves.size() - 1);
  std::size_t k = cut(rng);
  std::vector<Variable> left(leaves.begin(), leaves.begin() + k);
  std::vector<Variable> right(leaves.begin() + k, leaves.end());
  return Monomial::apply(kMul, {random_tree(left, rng), random_tree(right, rng)});
}

namespace {

// Gauss-Jordan inverse; throws if singular.
std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational f = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational g = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

bool invertible(const std::vector<std::vector<Rational>>& m) {
  try {
    inverse(m);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

systems::BinaryAlgebra change_basis(const systems::BinaryAlgebra& a,
                                    const std::vector<std::vector<Rational>>& p) {
  auto pinv = inverse(p);
  std::vector<std::string> names;
  for (int i = 0; i < a.dim; ++i) names.push_back("f" + std::to_string(i + 1));
  systems::BinaryAlgebra out(names);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      auto prod = a.product(p[i], p[j]);
      // coordinates x with x p = prod
      for (int k = 0; k < a.dim; ++k) {
        Rational s = 0;
        for (int l = 0; l < a.dim; ++l) s += prod[l] * pinv[l][k];
        out.table[i][j][k] = s;
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> random_invertible(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    if (invertible(m)) return m;
  }
}

Tally associator_closure_trials(int trials, std::uint32_t seed) {
  std::mt19937 rng(seed);
  const std::vector<systems::BinaryAlgebra> algebras{
      systems::matrix_algebra(1, false), systems::matrix_algebra(2, true),
      systems::matrix_algebra(2, false)};
  Tally tally;
  for (int t = 0; t < trials; ++t) {
    const auto& base = algebras[static_cast<std::size_t>(t) % algebras.size()];
    auto a = change_basis(base, random_invertible(base.dim, rng));
    auto triple = systems::associator_system(a);
    bool lie = systems::lie_triple_check(triple).ok;
    bool lts = systems::check_lts(triple).ok;
    tally.record(lie && lts, "associator system of a " + std::to_string(base.dim) +
                                 "-dimensional matrix algebra, trial " + std::to_string(t) +
                                 (lie ? "" : ": not a Lie triple system") +
                                 (lts ? "" : ": not a Leibniz triple system"));
  }
  return tally;
}

}  // namespace forge::props
