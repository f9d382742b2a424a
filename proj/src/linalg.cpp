#include "forge/linalg.hpp"

#include <algorithm>

namespace forge {

SparseVector make_sparse(std::map<std::size_t, Rational> entries) {
  SparseVector out;
  out.reserve(entries.size());
  for (auto& [i, c] : entries) {
    if (c != 0) out.emplace_back(i, std::move(c));
  }
  return out;
}

void subtract_scaled(SparseVector& r, const SparseVector& p, const Rational& f) {
  if (f == 0 || p.empty()) return;
  SparseVector out;
  out.reserve(r.size() + p.size());
  auto a = r.begin();
  auto b = p.begin();
  Rational tmp;
  while (a != r.end() || b != p.end()) {
    if (b == p.end() || (a != r.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == r.end() || b->first < a->first) {
      out.emplace_back(b->first, -f * b->second);
      ++b;
    } else {
      tmp = f * b->second;
      a->second -= tmp;
      if (a->second != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  r = std::move(out);
}

void scale(SparseVector& r, const Rational& f) {
  if (f == 0) {
    r.clear();
    return;
  }
  for (auto& [i, c] : r) c *= f;
}

EchelonSpan::Reduced EchelonSpan::reduce(SparseVector v) const {
  Reduced out;
  // Leading-term reduction: the leading column strictly increases.
  std::size_t start = 0;
  while (start < v.size()) {
    auto it = pivot_of_column_.find(v[start].first);
    if (it == pivot_of_column_.end()) {
      ++start;
      continue;
    }
    Rational f = v[start].second;
    out.ops.emplace_back(it->second, f);
    // Pivot rows have no entries left of their leading column.
    subtract_scaled(v, pivots_[it->second].row, f);
  }
  out.residual = std::move(v);
  return out;
}

bool EchelonSpan::add(const SparseVector& v) {
  std::size_t g = generator_count_++;
  Reduced r = reduce(v);
  if (r.residual.empty()) {
    dependent_.push_back({g, std::move(r.ops)});
    return false;
  }
  Pivot p;
  p.generator = g;
  p.inverse_lead = 1 / r.residual.front().second;
  p.row = std::move(r.residual);
  scale(p.row, p.inverse_lead);
  p.ops = std::move(r.ops);
  pivot_of_column_.emplace(p.row.front().first, pivots_.size());
  pivots_.push_back(std::move(p));
  return true;
}

std::map<std::size_t, Rational> EchelonSpan::back_substitute(
    const std::vector<std::pair<std::size_t, Rational>>& ops) const {
  // Weights on pivot rows; ops of a pivot only refer to earlier pivots.
  std::map<std::size_t, Rational> weight;
  for (const auto& [q, f] : ops) weight[q] += f;
  std::map<std::size_t, Rational> combination;
  while (!weight.empty()) {
    auto last = std::prev(weight.end());
    std::size_t p = last->first;
    Rational w = std::move(last->second);
    weight.erase(last);
    if (w == 0) continue;
    const Pivot& pv = pivots_[p];
    Rational scaled = w * pv.inverse_lead;
    combination[pv.generator] += scaled;
    for (const auto& [q, f] : pv.ops) weight[q] -= scaled * f;
  }
  for (auto it = combination.begin(); it != combination.end();) {
    it = it->second == 0 ? combination.erase(it) : std::next(it);
  }
  return combination;
}

EchelonSpan::Membership EchelonSpan::express(const SparseVector& target) const {
  Membership m;
  Reduced r = reduce(target);
  if (!r.residual.empty()) {
    m.witness = r.residual.front().first;
    return m;
  }
  m.member = true;
  m.combination = back_substitute(r.ops);
  return m;
}

std::vector<std::map<std::size_t, Rational>> EchelonSpan::dependencies() const {
  std::vector<std::map<std::size_t, Rational>> out;
  for (const auto& d : dependent_) {
    auto relation = back_substitute(d.ops);
    for (auto& [g, c] : relation) c = -c;
    relation[d.generator] += 1;
    out.push_back(std::move(relation));
  }
  return out;
}

std::vector<SparseVector> reduced_echelon(const std::vector<SparseVector>& rows) {
  std::vector<SparseVector> basis;  // leading coefficient 1, distinct leads
  for (SparseVector v : rows) {
    for (const auto& b : basis) {
      auto it = std::lower_bound(v.begin(), v.end(), b.front().first,
                                 [](const auto& e, std::size_t col) { return e.first < col; });
      if (it != v.end() && it->first == b.front().first) {
        Rational f = it->second;
        subtract_scaled(v, b, f);
      }
    }
    if (v.empty()) continue;
    scale(v, 1 / v.front().second);
    for (auto& b : basis) {
      auto it = std::lower_bound(b.begin(), b.end(), v.front().first,
                                 [](const auto& e, std::size_t col) { return e.first < col; });
      if (it != b.end() && it->first == v.front().first) {
        Rational f = it->second;
        subtract_scaled(b, v, f);
      }
    }
    basis.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().first < b.front().first; });
  return basis;
}

}  // namespace forge
