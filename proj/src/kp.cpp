#include "forge/kp.hpp"

#include <algorithm>

namespace forge::kp {

namespace {

Monomial resubscript(const Monomial& m, std::size_t central, std::size_t start) {
  if (m.is_leaf()) return m;
  const OpSymbol& op = m.op();
  if (op.variant != 0) {
    throw Error("operation '" + op.display() + "' already carries a variant subscript");
  }
  int variant = 0;
  std::vector<Monomial> children;
  std::size_t offset = start;
  for (std::size_t j = 0; j < m.args().size(); ++j) {
    const Monomial& arg = m.args()[j];
    std::size_t next = offset + static_cast<std::size_t>(arg.degree());
    if (central >= offset && central < next) variant = static_cast<int>(j) + 1;
    children.push_back(resubscript(arg, central, offset));
    offset = next;
  }
  if (variant == 0) variant = central < start ? 1 : op.arity;
  return Monomial::apply(OpSymbol{op.name, op.arity, variant}, std::move(children));
}

Polynomial leaf(const Variable& v) { return Polynomial(Monomial::leaf(v)); }

Identity interchange(const OpSymbol& op, int j, int i, int k, int l) {
  const int n = op.arity;
  auto vars = letters(2 * n - 1);
  auto build = [&](int inner_variant) {
    std::size_t next = 0;
    std::vector<Polynomial> outer;
    for (int pos = 1; pos <= n; ++pos) {
      if (pos == i) {
        std::vector<Polynomial> inner;
        for (int q = 0; q < n; ++q) inner.push_back(leaf(vars[next++]));
        outer.push_back(apply_op(OpSymbol{op.name, n, inner_variant}, inner));
      } else {
        outer.push_back(leaf(vars[next++]));
      }
    }
    return apply_op(OpSymbol{op.name, n, j}, outer);
  };
  std::string name = "bar." + std::to_string(j) + "." + std::to_string(i) + ".";
  if (k == 1) {
    name += static_cast<char>('a' + (l - 2));
  } else {
    name += std::to_string(k) + std::to_string(l);
  }
  return Identity{name, build(k) - build(l), vars};
}

}  // namespace

std::vector<Identity> kp_part1(const Identity& id) {
  if (!id.is_multilinear()) throw Error("identity '" + id.name + "' is not multilinear");
  std::vector<Identity> out;
  for (std::size_t i = 0; i < id.variables.size(); ++i) {
    const Variable& central = id.variables[i];
    Polynomial p;
    for (const auto& [m, c] : id.lhs.terms()) {
      const auto& leaves = m.leaves();
      auto pos = static_cast<std::size_t>(
          std::find(leaves.begin(), leaves.end(), central) - leaves.begin());
      p.add_term(resubscript(m, pos, 0), c);
    }
    out.push_back(Identity{id.name + std::to_string(i + 1), std::move(p), id.variables});
  }
  return out;
}

std::vector<Identity> kp_part2(const OpSymbol& op) {
  std::vector<Identity> out;
  const int n = op.arity;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (i == j) continue;
      for (int l = 2; l <= n; ++l) out.push_back(interchange(op, j, i, 1, l));
    }
  }
  return out;
}

std::vector<Identity> kp_part2_full(const OpSymbol& op) {
  std::vector<Identity> out;
  const int n = op.arity;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (i == j) continue;
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          if (k != l) out.push_back(interchange(op, j, i, k, l));
        }
      }
    }
  }
  return out;
}

std::vector<Identity> KPOutput::part1_flat() const {
  std::vector<Identity> out;
  for (const auto& group : part1) out.insert(out.end(), group.begin(), group.end());
  return out;
}

std::vector<Identity> KPOutput::all() const {
  auto out = part1_flat();
  out.insert(out.end(), part2.begin(), part2.end());
  return out;
}

KPOutput kp_apply(const VarietyPresentation& v) {
  KPOutput out;
  std::set<OpSymbol> ops = v.signature;
  for (const auto& id : v.identities) {
    for (const auto& op : id.signature()) {
      if (!v.signature.empty() && !v.signature.count(op)) {
        throw Error("identity '" + id.name + "' uses '" + op.display() +
                    "', which is outside the signature");
      }
      ops.insert(op);
    }
    out.part1.push_back(kp_part1(id));
  }
  for (const auto& op : ops) {
    for (int k = 1; k <= op.arity; ++k) out.signature.insert(OpSymbol{op.name, op.arity, k});
    auto bars = kp_part2(op);
    if (ops.size() > 1) {
      for (auto& b : bars) b.name = op.name + "." + b.name;
    }
    out.part2.insert(out.part2.end(), bars.begin(), bars.end());
  }
  return out;
}

}  // namespace forge::kp
