#include "forge/fixtures.hpp"

#include <map>

#include "fixture_data.hpp"

namespace forge::fixtures {

namespace {

const std::map<std::string, std::string_view, std::less<>>& table() {
  static const auto entries = [] {
    std::map<std::string, std::string_view, std::less<>> out;
    for (std::size_t i = 0; i < detail::kFixtureCount; ++i) {
      out.emplace(detail::kFixtures[i].path, detail::kFixtures[i].content);
    }
    return out;
  }();
  return entries;
}

const std::map<std::string, Document, std::less<>>& documents() {
  static const auto docs = [] {
    std::map<std::string, Document, std::less<>> out;
    for (const auto& [path, content] : table()) {
      if (path.find('/') != std::string::npos) continue;
      if (path.size() < 4 || path.compare(path.size() - 4, 4, ".txt") != 0) continue;
      try {
        out.emplace(path.substr(0, path.size() - 4), parse_document(content));
      } catch (const Error& e) {
        throw Error("fixture " + path + ": " + e.what());
      }
    }
    return out;
  }();
  return docs;
}

const OpSymbol kT{"t", 3, 0};

Polynomial t(const Polynomial& x, const Polynomial& y, const Polynomial& z) {
  return apply_op(kT, {x, y, z});
}
// R_{u,v}(x) = <x,u,v> - <x,v,u>
Polynomial R(const Polynomial& u, const Polynomial& v, const Polynomial& x) {
  return t(x, u, v) - t(x, v, u);
}
// L_{u,v}(x) = <u,v,x>
Polynomial L(const Polynomial& u, const Polynomial& v, const Polynomial& x) { return t(u, v, x); }

}  // namespace

std::string_view text(std::string_view path) {
  auto it = table().find(path);
  if (it == table().end()) throw Error("no fixture '" + std::string(path) + "'");
  return it->second;
}

std::vector<std::string> paths() {
  std::vector<std::string> out;
  for (const auto& [path, content] : table()) out.push_back(path);
  return out;
}

const Document& document(std::string_view stem) {
  auto it = documents().find(stem);
  if (it == documents().end()) throw Error("no fixture file '" + std::string(stem) + "'");
  return it->second;
}

const Identity& identity(std::string_view stem, std::string_view name) {
  return document(stem).identity(name);
}

std::vector<Identity> identities(std::string_view stem, const std::vector<std::string>& names) {
  std::vector<Identity> out;
  for (const auto& n : names) out.push_back(identity(stem, n));
  return out;
}

const RewriteRule& rule(std::string_view stem, std::string_view name) {
  return document(stem).rule(name);
}

std::vector<Identity> operator_identities() {
  auto v = [](const char* name) { return Polynomial::variable(name); };
  const Polynomial a = v("a"), b = v("b"), c = v("c"), d = v("d"), e = v("e");
  const std::vector<Variable> vars = letters(5);

  Polynomial op1 = R(a, b, t(c, d, e)) - t(R(a, b, c), d, e) - t(c, R(a, b, d), e) -
                   t(c, d, R(a, b, e));
  Polynomial op2 = L(a, b, t(c, d, e)) - t(L(a, b, c), d, e) + t(L(a, b, d), c, e) +
                   t(L(a, b, e), c, d) - t(L(a, b, e), d, c);
  Polynomial op3 = R(a, b, R(c, d, e)) - R(c, d, R(a, b, e)) - R(R(a, b, c), d, e) +
                   R(R(a, b, d), c, e);
  Polynomial op4 = R(c, d, L(a, b, e)) - L(a, b, R(c, d, e)) - L(L(a, b, c), d, e) +
                   L(L(a, b, d), c, e);
  return {Identity{"OP1", op1, vars}, Identity{"OP2", op2, vars}, Identity{"OP3", op3, vars},
          Identity{"OP4", op4, vars}};
}

systems::TernaryStructureConstants system(std::string_view name) {
  return systems::parse_system_json(text("system" + std::string(name) + ".json"));
}

systems::TernaryStructureConstants system85(const Rational& zeta) {
  systems::TernaryStructureConstants s({"x", "y"});
  s.at(0, 1, 1, 0) = zeta;
  s.at(1, 1, 1, 0) = 1 - zeta;
  return s;
}

systems::Ternary<MPoly> system85_symbolic() {
  systems::Ternary<MPoly> s({"x", "y"});
  MPoly zeta = MPoly::unknown("zeta");
  s.at(0, 1, 1, 0) = zeta;
  s.at(1, 1, 1, 0) = MPoly(1) - zeta;
  return s;
}

}  // namespace forge::fixtures
