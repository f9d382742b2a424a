#include "forge/systems.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "forge/fixtures.hpp"
#include "forge/parse.hpp"

namespace forge::systems {

namespace {

const std::vector<Identity>& lts_identities() {
  static const std::vector<Identity> ids = fixtures::identities("lts", {"LTS-A", "LTS-B"});
  return ids;
}

}  // namespace

CheckResult check_lts(const TernaryStructureConstants& t) {
  return check_identities(t, lts_identities());
}

CheckResult check_lts(const Ternary<MPoly>& t) { return check_identities(t, lts_identities()); }

CheckResult lie_triple_check(const TernaryStructureConstants& t) {
  static const std::vector<Identity> ids =
      fixtures::identities("lie_triple", {"skew", "cyclic", "derivation"});
  return check_identities(t, ids);
}

BinaryAlgebra::BinaryAlgebra(std::vector<std::string> names)
    : dim(static_cast<int>(names.size())), basis(std::move(names)) {
  table.assign(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, 0)));
}

std::vector<Rational> BinaryAlgebra::product(const std::vector<Rational>& a,
                                             const std::vector<Rational>& b) const {
  std::vector<Rational> out(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      Rational ab = a[i] * b[j];
      for (int l = 0; l < dim; ++l) {
        if (table[i][j][l] != 0) out[l] += ab * table[i][j][l];
      }
    }
  }
  return out;
}

std::vector<Rational> BinaryAlgebra::unit(int i) const {
  std::vector<Rational> v(dim, 0);
  v[i] = 1;
  return v;
}

BinaryAlgebra build_envelope(const TernaryStructureConstants& t) {
  const int n = t.dim;
  std::vector<std::string> names = t.basis;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) names.push_back(t.basis[i] + "*" + t.basis[j]);
  }
  BinaryAlgebra u(std::move(names));
  auto pair = [n](int i, int j) { return n + i * n + j; };
  auto triple = [&](int i, int j, int k, int l) { return t.at(i, j, k, l); };

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // a.b = ab
      u.table[a][b][pair(a, b)] = 1;
      for (int c = 0; c < n; ++c) {
        for (int l = 0; l < n; ++l) {
          // a.(bc) = <a,b,c> - <a,c,b>
          u.table[a][pair(b, c)][l] = triple(a, b, c, l) - triple(a, c, b, l);
          // (ab).c = <a,b,c>
          u.table[pair(a, b)][c][l] = triple(a, b, c, l);
        }
        for (int d = 0; d < n; ++d) {
          // (ab).(cd) = <a,b,c>d - <a,b,d>c
          auto& cell = u.table[pair(a, b)][pair(c, d)];
          for (int l = 0; l < n; ++l) {
            cell[pair(l, d)] += triple(a, b, c, l);
            cell[pair(l, c)] -= triple(a, b, d, l);
          }
        }
      }
    }
  }
  return u;
}

CheckResult check_leibniz(const BinaryAlgebra& alg) {
  CheckResult result;
  for (int a = 0; a < alg.dim; ++a) {
    for (int b = 0; b < alg.dim; ++b) {
      for (int c = 0; c < alg.dim; ++c) {
        auto ab_c = alg.product(alg.table[a][b], alg.unit(c));
        auto ac_b = alg.product(alg.table[a][c], alg.unit(b));
        auto a_bc = alg.product(alg.unit(a), alg.table[b][c]);
        for (int l = 0; l < alg.dim; ++l) {
          if (ab_c[l] - ac_b[l] - a_bc[l] != 0) {
            result.ok = false;
            result.violations.push_back({"leibniz", {a, b, c}});
            break;
          }
        }
      }
    }
  }
  return result;
}

TernaryStructureConstants associator_system(const BinaryAlgebra& alg) {
  TernaryStructureConstants t(alg.basis);
  auto prod3 = [&](int i, int j, int k) {
    return alg.product(alg.table[i][j], alg.unit(k));
  };
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) {
      for (int k = 0; k < alg.dim; ++k) {
        auto abc = prod3(i, j, k);
        auto bac = prod3(j, i, k);
        auto cab = prod3(k, i, j);
        auto cba = prod3(k, j, i);
        for (int l = 0; l < alg.dim; ++l) t.at(i, j, k, l) = abc[l] - bac[l] - cab[l] + cba[l];
      }
    }
  }
  return t;
}

BinaryAlgebra matrix_algebra(int n, bool upper_triangular) {
  if (n < 1) throw Error("matrix size must be positive");
  std::vector<std::pair<int, int>> units;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    for (int j = upper_triangular ? i : 0; j < n; ++j) {
      units.emplace_back(i, j);
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  BinaryAlgebra alg(names);
  for (std::size_t a = 0; a < units.size(); ++a) {
    for (std::size_t b = 0; b < units.size(); ++b) {
      if (units[a].second != units[b].first) continue;
      std::pair<int, int> target{units[a].first, units[b].second};
      auto it = std::find(units.begin(), units.end(), target);
      alg.table[a][b][it - units.begin()] = 1;
    }
  }
  return alg;
}

std::vector<std::string> display_names(const BinaryAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& name : a.basis) {
    auto star = name.find('*');
    if (star == std::string::npos) {
      out.push_back(name);
      continue;
    }
    std::string left = name.substr(0, star);
    std::string right = name.substr(star + 1);
    out.push_back(left == right ? left + "^2" : left + right);
  }
  return out;
}

namespace {

std::string coefficient_prefix(const Rational& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return to_string(c);
}

}  // namespace

std::string format_entry(const std::vector<Rational>& v, const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) terms.emplace_back(names[i], v[i]);
  }
  if (terms.empty()) return ".";
  if (terms.size() == 1) return coefficient_prefix(terms[0].second) + terms[0].first;
  Rational lead = terms[0].second;
  bool common = std::all_of(terms.begin(), terms.end(),
                            [&](const auto& t) { return abs(t.second) == abs(lead); });
  std::string out;
  if (common) {
    out = coefficient_prefix(lead) + "(";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      bool same = (terms[i].second > 0) == (lead > 0);
      if (i > 0) out += same ? "+" : "-";
      out += terms[i].first;
    }
    return out + ")";
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Rational& c = terms[i].second;
    if (i > 0) out += c > 0 ? "+" : "-";
    out += coefficient_prefix(i > 0 ? Rational(abs(c)) : c) + terms[i].first;
  }
  return out;
}

std::string table_text(const BinaryAlgebra& a) {
  auto names = display_names(a);
  std::vector<std::vector<std::string>> cells(a.dim, std::vector<std::string>(a.dim));
  std::size_t label_width = 1;
  std::vector<std::size_t> widths(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    label_width = std::max(label_width, names[i].size());
    widths[i] = names[i].size();
  }
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      cells[i][j] = format_entry(a.table[i][j], names);
      widths[j] = std::max(widths[j], cells[i][j].size());
    }
  }
  auto pad_right = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::string out = pad_right(".", label_width) + " |";
  for (int j = 0; j < a.dim; ++j) out += " " + pad_left(names[j], widths[j]);
  out += "\n" + std::string(label_width + 1, '-') + "+";
  for (int j = 0; j < a.dim; ++j) out += std::string(widths[j] + 1, '-');
  out += "\n";
  for (int i = 0; i < a.dim; ++i) {
    out += pad_right(names[i], label_width) + " |";
    for (int j = 0; j < a.dim; ++j) out += " " + pad_left(cells[i][j], widths[j]);
    out += "\n";
  }
  return out;
}

namespace {

std::string linear_combination(const std::vector<Rational>& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += v[i] == 1 ? names[i] : to_string(v[i]) + "*" + names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string table_json(const BinaryAlgebra& a) {
  nlohmann::ordered_json j;
  j["dim"] = a.dim;
  j["basis"] = a.basis;
  nlohmann::ordered_json product = nlohmann::ordered_json::object();
  for (int r = 0; r < a.dim; ++r) {
    for (int c = 0; c < a.dim; ++c) {
      const auto& cell = a.table[r][c];
      if (std::all_of(cell.begin(), cell.end(), [](const Rational& q) { return q == 0; })) continue;
      product[a.basis[r] + "," + a.basis[c]] = linear_combination(cell, a.basis);
    }
  }
  j["product"] = product;
  return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    piece.erase(0, piece.find_first_not_of(' '));
    piece.erase(piece.find_last_not_of(' ') + 1);
    out.push_back(piece);
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

TernaryStructureConstants parse_system_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed system JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis")) {
    throw Error("system JSON needs \"dim\" and \"basis\"");
  }
  if (!j["dim"].is_number_integer()) throw Error("\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  if (!j["basis"].is_array()) throw Error("\"basis\" must be an array of names");
  std::vector<std::string> basis;
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) throw Error("basis names must be strings");
    basis.push_back(b.get<std::string>());
  }
  if (static_cast<int>(basis.size()) != dim) throw Error("\"dim\" does not match the basis length");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& name = basis[i];
    bool valid = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0])) &&
                 std::all_of(name.begin(), name.end(), [](char ch) {
                   return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                 });
    if (!valid) throw Error("basis name '" + name + "' is not an identifier");
    if (!index.emplace(name, static_cast<int>(i)).second) {
      throw Error("duplicate basis name '" + name + "'");
    }
  }
  TernaryStructureConstants t(basis);
  if (!j.contains("triple")) return t;
  if (!j["triple"].is_object()) throw Error("\"triple\" must be an object");
  for (const auto& [key, value] : j["triple"].items()) {
    auto parts = split_commas(key);
    if (parts.size() != 3) throw Error("triple key '" + key + "' must name three basis elements");
    int ijk[3];
    for (int s = 0; s < 3; ++s) {
      auto it = index.find(parts[s]);
      if (it == index.end()) throw Error("unknown basis element '" + parts[s] + "' in '" + key + "'");
      ijk[s] = it->second;
    }
    if (!value.is_string()) throw Error("value of '" + key + "' must be a string");
    Polynomial p = parse_polynomial(value.get<std::string>());
    for (const auto& [m, c] : p.terms()) {
      if (!m.is_leaf()) {
        throw Error("value of '" + key + "' must be a linear combination of basis names");
      }
      auto it = index.find(m.variable().name());
      if (it == index.end()) {
        throw Error("unknown basis element '" + m.variable().name() + "' in value of '" + key + "'");
      }
      t.at(ijk[0], ijk[1], ijk[2], it->second) = c;
    }
  }
  return t;
}

std::string system_json(const TernaryStructureConstants& t) {
  nlohmann::ordered_json j;
  j["dim"] = t.dim;
  j["basis"] = t.basis;
  nlohmann::ordered_json triple = nlohmann::ordered_json::object();
  for (int i = 0; i < t.dim; ++i) {
    for (int k1 = 0; k1 < t.dim; ++k1) {
      for (int k2 = 0; k2 < t.dim; ++k2) {
        std::vector<Rational> v(t.dim);
        bool zero = true;
        for (int l = 0; l < t.dim; ++l) {
          v[l] = t.at(i, k1, k2, l);
          zero = zero && v[l] == 0;
        }
        if (zero) continue;
        std::string key = t.basis[i] + "," + t.basis[k1] + "," + t.basis[k2];
        triple[key] = linear_combination(v, t.basis);
      }
    }
  }
  j["triple"] = triple;
  return j.dump() + "\n";
}

std::string unknown_name(int dim, int i, int j, int k, int l) {
  std::string suffix = std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1);
  if (dim == 2) return (l == 0 ? "alpha_" : "beta_") + suffix;
  return "c" + std::to_string(l + 1) + "_" + suffix;
}

Ternary<MPoly> generic_system(int dim, const std::vector<std::string>& basis) {
  if (dim > 9) throw Error("symbolic systems are limited to dimension 9");
  Ternary<MPoly> t(basis);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) t.at(i, j, k, l) = MPoly::unknown(unknown_name(dim, i, j, k, l));
  return t;
}

Ternary<MPoly> to_symbolic(const TernaryStructureConstants& t) {
  Ternary<MPoly> s(t.basis);
  for (std::size_t i = 0; i < t.c.size(); ++i) s.c[i] = MPoly(t.c[i]);
  return s;
}

QuadraticSystem lts_equations(int dim) {
  std::vector<std::string> basis;
  if (dim == 2) {
    basis = {"x", "y"};
  } else {
    for (int i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i + 1));
  }
  Ternary<MPoly> t = generic_system(dim, basis);
  QuadraticSystem q;
  q.dim = dim;
  for (int l = 0; l < dim; ++l)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) q.unknowns.push_back(unknown_name(dim, i, j, k, l));
  std::set<MPoly> equations;
  for (const auto& id : lts_identities()) {
    const std::size_t nvars = id.variables.size();
    std::vector<int> tuple(nvars, 0);
    while (true) {
      std::map<Variable, std::vector<MPoly>> values;
      for (std::size_t v = 0; v < nvars; ++v) values[id.variables[v]] = t.unit(tuple[v]);
      for (const auto& e : evaluate(t, id.lhs, values)) {
        if (!e.is_zero()) equations.insert(e.primitive());
      }
      std::size_t k = nvars;
      while (k > 0) {
        if (++tuple[k - 1] < dim) break;
        tuple[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  q.equations.assign(equations.begin(), equations.end());
  return q;
}

std::vector<MPoly> residuals(const QuadraticSystem& q, const Ternary<MPoly>& t) {
  if (t.dim != q.dim) throw Error("system dimension does not match the equations");
  std::map<std::string, MPoly> values;
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j)
      for (int k = 0; k < t.dim; ++k)
        for (int l = 0; l < t.dim; ++l) values[unknown_name(t.dim, i, j, k, l)] = t.at(i, j, k, l);
  std::vector<MPoly> out;
  for (const auto& e : q.equations) out.push_back(e.substitute(values));
  return out;
}

bool satisfies(const QuadraticSystem& q, const TernaryStructureConstants& t) {
  auto r = residuals(q, to_symbolic(t));
  return std::all_of(r.begin(), r.end(), [](const MPoly& p) { return p.is_zero(); });
}

namespace {

std::int64_t mod(const mpz_class& z, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = a % p;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::int64_t>> search_fp(const QuadraticSystem& q, std::int64_t p,
                                                 const std::vector<std::string>& mask) {
  if (mask.empty()) throw Error("search mask is empty");
  if (!is_prime(p)) throw Error("field size " + std::to_string(p) + " is not a prime");
  if (p > 1000000) throw Error("prime too large for exhaustive search");
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (std::find(q.unknowns.begin(), q.unknowns.end(), mask[i]) == q.unknowns.end()) {
      throw Error("'" + mask[i] + "' is not an unknown of the system");
    }
    if (!slot.emplace(mask[i], i).second) throw Error("'" + mask[i] + "' appears twice in the mask");
  }
  double candidates = std::pow(static_cast<double>(p), static_cast<double>(mask.size()));
  if (candidates > 1e8) throw Error("mask too large: more than 1e8 candidates");

  // Equations restricted to the mask; terms touching a zero unknown vanish.
  struct Term {
    std::int64_t coeff;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  std::vector<std::vector<Term>> reduced;
  for (const auto& e : q.equations) {
    std::vector<Term> terms;
    for (const auto& [exps, c] : e.terms()) {
      Term t;
      bool vanishes = false;
      for (const auto& [name, k] : exps) {
        auto it = slot.find(name);
        if (it == slot.end()) {
          vanishes = true;
          break;
        }
        t.powers.emplace_back(it->second, k);
      }
      if (vanishes) continue;
      std::int64_t den = mod(c.get_den(), p);
      if (den == 0) throw Error("equation coefficient has a denominator divisible by p");
      t.coeff = mod(c.get_num(), p) * inverse_mod(den, p) % p;
      if (t.coeff != 0) terms.push_back(std::move(t));
    }
    if (!terms.empty()) reduced.push_back(std::move(terms));
  }

  std::vector<std::vector<std::int64_t>> solutions;
  std::vector<std::int64_t> x(mask.size(), 0);
  while (true) {
    bool ok = true;
    for (const auto& eq : reduced) {
      std::int64_t total = 0;
      for (const auto& t : eq) {
        std::int64_t v = t.coeff;
        for (const auto& [i, k] : t.powers) {
          for (unsigned r = 0; r < k; ++r) v = v * x[i] % p;
        }
        total = (total + v) % p;
      }
      if (total != 0) {
        ok = false;
        break;
      }
    }
    if (ok) solutions.push_back(x);
    std::size_t k = x.size();
    while (k > 0) {
      if (++x[k - 1] < p) break;
      x[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return solutions;
}

}  // namespace forge::systems
