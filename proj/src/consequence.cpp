#include "forge/consequence.hpp"

#include <algorithm>
#include <numeric>

#include "forge/parse.hpp"

namespace forge::consequence {

MonomialBasis::MonomialBasis(std::vector<OpSymbol> signature, int degree,
                             std::vector<Variable> vars, std::vector<Monomial> monomials)
    : signature_(std::move(signature)),
      degree_(degree),
      vars_(std::move(vars)),
      monomials_(std::move(monomials)) {
  std::sort(monomials_.begin(), monomials_.end());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector MonomialBasis::coordinates(const Polynomial& p) const {
  std::map<std::size_t, Rational> entries;
  for (const auto& [m, c] : p.terms()) {
    auto i = index(m);
    if (!i) throw Error("monomial " + format(m) + " lies outside the basis");
    entries[*i] = c;
  }
  return make_sparse(std::move(entries));
}

Polynomial MonomialBasis::polynomial(const SparseVector& v) const {
  Polynomial p;
  for (const auto& [i, c] : v) p.add_term(monomials_.at(i), c);
  return p;
}

namespace {

void compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    current.push_back(first);
    compositions(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

std::vector<Monomial> shapes_rec(const std::vector<OpSymbol>& signature, int degree,
                                 std::map<int, std::vector<Monomial>>& memo) {
  if (auto it = memo.find(degree); it != memo.end()) return it->second;
  std::vector<Monomial> out;
  if (degree == 1) out.push_back(Monomial::leaf(Variable("_")));
  for (const auto& op : signature) {
    if (op.arity > degree || (op.arity == 1 && degree == 1)) continue;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    compositions(degree, op.arity, cur, parts);
    for (const auto& split : parts) {
      std::vector<std::vector<Monomial>> options;
      for (int d : split) options.push_back(shapes_rec(signature, d, memo));
      std::vector<std::size_t> pos(split.size(), 0);
      bool empty = std::any_of(options.begin(), options.end(),
                               [](const auto& o) { return o.empty(); });
      while (!empty) {
        std::vector<Monomial> children;
        for (std::size_t k = 0; k < split.size(); ++k) children.push_back(options[k][pos[k]]);
        out.push_back(Monomial::apply(op, std::move(children)));
        std::size_t k = 0;
        for (; k < pos.size(); ++k) {
          if (++pos[k] < options[k].size()) break;
          pos[k] = 0;
        }
        if (k == pos.size()) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  memo[degree] = out;
  return out;
}

Monomial fill_rec(const Monomial& shape, const std::vector<Variable>& labels, std::size_t& next) {
  if (shape.is_leaf()) return Monomial::leaf(labels.at(next++));
  std::vector<Monomial> children;
  for (const auto& a : shape.args()) children.push_back(fill_rec(a, labels, next));
  return Monomial::apply(shape.op(), std::move(children));
}

std::string call_label(const Identity& id, const std::vector<Polynomial>& args) {
  std::string out = id.name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += format(args[i]);
  }
  return out + ")";
}

Polynomial leaf(const Variable& v) { return Polynomial(Monomial::leaf(v)); }

}  // namespace

std::vector<Monomial> enumerate_shapes(const std::vector<OpSymbol>& signature, int degree) {
  if (degree < 1) throw Error("degree must be positive");
  std::map<int, std::vector<Monomial>> memo;
  return shapes_rec(signature, degree, memo);
}

Monomial fill_shape(const Monomial& shape, const std::vector<Variable>& labels) {
  std::size_t next = 0;
  Monomial out = fill_rec(shape, labels, next);
  if (next != labels.size()) throw Error("label count does not match the shape's degree");
  return out;
}

MonomialBasis enumerate_basis(const std::vector<OpSymbol>& signature, int degree,
                              const std::vector<Variable>& vars) {
  if (static_cast<int>(vars.size()) != degree) {
    throw Error("a multilinear basis needs exactly `degree` variables");
  }
  auto shapes = enumerate_shapes(signature, degree);
  if (shapes.empty()) {
    throw Error("degree " + std::to_string(degree) + " is not reachable with this signature");
  }
  std::vector<Variable> perm = vars;
  std::sort(perm.begin(), perm.end());
  std::vector<Monomial> monomials;
  do {
    for (const auto& s : shapes) monomials.push_back(fill_shape(s, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return MonomialBasis(signature, degree, vars, std::move(monomials));
}

std::vector<Generator> same_degree_instances(const Identity& id, const std::vector<Variable>& vars,
                                             std::size_t source) {
  if (!id.is_multilinear()) throw Error("identity '" + id.name + "' is not multilinear");
  if (id.variables.size() != vars.size()) {
    throw Error("identity '" + id.name + "' has degree " + std::to_string(id.variables.size()) +
                " but " + std::to_string(vars.size()) + " variables were given");
  }
  std::vector<std::size_t> perm(vars.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Generator> out;
  do {
    std::vector<Polynomial> args;
    for (auto i : perm) args.push_back(leaf(vars[i]));
    out.push_back({call_label(id, args), source, id.instantiate(args)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Generator> lifted_instances(const Identity& id, int target_degree,
                                        const std::vector<Variable>& vars, std::size_t source) {
  if (!id.is_multilinear()) throw Error("identity '" + id.name + "' is not multilinear");
  const int d = static_cast<int>(id.variables.size());
  if (target_degree != d + 1) {
    throw Error("lifting supports a degree gap of exactly one");
  }
  if (static_cast<int>(vars.size()) != target_degree) {
    throw Error("lifting needs exactly target_degree variables");
  }
  std::optional<OpSymbol> product;
  for (const auto& op : id.signature()) {
    if (op.arity != 2 || (product && *product != op)) {
      throw Error("lifting needs a single binary operation");
    }
    product = op;
  }
  if (!product) product = kMul;
  auto times = [&](const Polynomial& x, const Polynomial& y) {
    return apply_op(*product, {x, y});
  };

  std::vector<Generator> out;
  const std::size_t n = vars.size();
  // (i) a product of two letters in one slot.
  for (int slot = 0; slot < d; ++slot) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != x && k != y) rest.push_back(k);
        }
        do {
          std::vector<Polynomial> args;
          std::size_t r = 0;
          for (int s = 0; s < d; ++s) {
            args.push_back(s == slot ? times(leaf(vars[x]), leaf(vars[y])) : leaf(vars[rest[r++]]));
          }
          out.push_back({call_label(id, args), source, id.instantiate(args)});
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
    }
  }
  // (ii) an extra letter on the right or on the left.
  for (int side = 0; side < 2; ++side) {
    for (std::size_t z = 0; z < n; ++z) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != z) rest.push_back(k);
      }
      do {
        std::vector<Polynomial> args;
        for (auto k : rest) args.push_back(leaf(vars[k]));
        Polynomial inst = id.instantiate(args);
        std::string label = call_label(id, args);
        const std::string& letter = vars[z].name();
        if (side == 0) {
          out.push_back({label + "*" + letter, source, times(inst, leaf(vars[z]))});
        } else {
          out.push_back({letter + "*" + label, source, times(leaf(vars[z]), inst)});
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return out;
}

std::vector<Generator> all_instances(const std::vector<Identity>& ids,
                                     const std::vector<Variable>& vars) {
  std::vector<Generator> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto inst = same_degree_instances(ids[i], vars, i);
    out.insert(out.end(), std::make_move_iterator(inst.begin()),
               std::make_move_iterator(inst.end()));
  }
  return out;
}

Polynomial SpanCertificate::expand() const {
  Polynomial p;
  for (const auto& t : terms) p += t.coefficient * t.value;
  return p;
}

Rational SpanCertificate::coefficient_of(const std::string& label) const {
  Rational total = 0;
  for (const auto& t : terms) {
    if (t.label == label) total += t.coefficient;
  }
  return total;
}

std::string SpanCertificate::format() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    Rational mag = abs(t.coefficient);
    if (first) {
      if (t.coefficient < 0) out += '-';
    } else {
      out += t.coefficient < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += t.label;
  }
  return out;
}

InstanceSpan::InstanceSpan(std::vector<Generator> generators, Coordinates coordinates)
    : generators_(std::move(generators)), coordinates_(std::move(coordinates)) {
  for (const auto& g : generators_) span_.add(coordinates_(g.value));
}

SpanResult InstanceSpan::express(const SparseVector& target) const {
  SpanResult r;
  auto m = span_.express(target);
  r.member = m.member;
  r.witness = m.witness;
  for (const auto& [g, c] : m.combination) {
    r.certificate.terms.push_back({g, generators_[g].label, c, generators_[g].value});
  }
  return r;
}

SpanResult InstanceSpan::express(const Polynomial& target) const {
  return express(coordinates_(target));
}

SpanResult in_span(const Polynomial& target, const std::vector<Generator>& generators,
                   const MonomialBasis& basis) {
  InstanceSpan span(generators, [&](const Polynomial& p) { return basis.coordinates(p); });
  return span.express(target);
}

namespace {

std::vector<SpanResult> place_all(const std::vector<Identity>& targets, const InstanceSpan& span) {
  std::vector<SpanResult> out;
  for (const auto& id : targets) out.push_back(span.express(id.lhs));
  return out;
}

}  // namespace

Equivalence sets_equivalent(const std::vector<Identity>& a, const std::vector<Identity>& b,
                            int degree, const std::vector<Variable>& vars) {
  for (const auto* side : {&a, &b}) {
    for (const auto& id : *side) {
      if (id.degree() != degree && !id.lhs.is_zero()) {
        throw Error("identity '" + id.name + "' does not have degree " + std::to_string(degree));
      }
    }
  }
  auto normalized = [&](const std::vector<Identity>& ids) {
    std::vector<Identity> out;
    for (const auto& id : ids) {
      if (id.lhs.is_zero()) continue;
      std::vector<Polynomial> args;
      for (const auto& v : vars) args.push_back(leaf(v));
      out.push_back(Identity{id.name, id.instantiate(args), vars});
    }
    return out;
  };
  std::vector<Identity> na = normalized(a);
  std::vector<Identity> nb = normalized(b);
  auto gens_a = all_instances(na, vars);
  auto gens_b = all_instances(nb, vars);
  // Shared coordinates: every monomial that occurs, in canonical order.
  std::map<Monomial, std::size_t> index;
  for (const auto* gens : {&gens_a, &gens_b}) {
    for (const auto& g : *gens) {
      for (const auto& [m, c] : g.value.terms()) index.emplace(m, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [m, i] : index) i = next++;
  auto coordinates = [&index](const Polynomial& p) {
    std::map<std::size_t, Rational> entries;
    for (const auto& [m, c] : p.terms()) entries[index.at(m)] = c;
    return make_sparse(std::move(entries));
  };
  Equivalence eq;
  InstanceSpan span_a(std::move(gens_a), coordinates);
  InstanceSpan span_b(std::move(gens_b), coordinates);
  eq.b_in_a = place_all(nb, span_a);
  eq.a_in_b = place_all(na, span_b);
  auto all_members = [](const std::vector<SpanResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const SpanResult& r) { return r.member; });
  };
  eq.equivalent = all_members(eq.b_in_a) && all_members(eq.a_in_b);
  return eq;
}

}  // namespace forge::consequence
