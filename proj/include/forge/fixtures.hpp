#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forge/parse.hpp"
#include "forge/systems.hpp"

namespace forge::fixtures {

// Raw fixture text by path relative to the fixture directory, e.g. "lts.txt"
// or "golden/system8.1.txt". Throws forge::Error if absent.
std::string_view text(std::string_view path);
std::vector<std::string> paths();

// Parsed identity files by stem: "dialgebra", "leibniz", "lie_triple", "lts",
// "jordan".
const Document& document(std::string_view stem);
const Identity& identity(std::string_view stem, std::string_view name);
std::vector<Identity> identities(std::string_view stem, const std::vector<std::string>& names);
const RewriteRule& rule(std::string_view stem, std::string_view name);

// OP1..OP4 as polynomials in t(a,b,c,d,e), e being the generic argument.
std::vector<Identity> operator_identities();

// "8.1" .. "8.4"
systems::TernaryStructureConstants system(std::string_view name);
// <x,y,y> = zeta x, <y,y,y> = (1 - zeta) x
systems::TernaryStructureConstants system85(const Rational& zeta);
systems::Ternary<MPoly> system85_symbolic();

}  // namespace forge::fixtures
