#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forge/algebra.hpp"
#include "forge/rewrite.hpp"

namespace forge {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Declared operations. `mul/2` (the infix '*') is always present.
class Signature {
 public:
  Signature();

  // `variants` > 0 additionally allows name_1 .. name_variants.
  void declare(const std::string& name, int arity, int variants = 0);
  void declare(const OpSymbol& op);
  void merge(const Signature& other);

  // Resolves "name" or "name_k". Empty if undeclared.
  std::optional<OpSymbol> resolve(std::string_view identifier) const;

  // Every usable symbol: plain names and all declared variants.
  std::vector<OpSymbol> symbols() const;
  std::string declarations() const;

  static Signature of(const std::set<OpSymbol>& ops);

 private:
  struct Decl {
    int arity = 0;
    int variants = 0;
  };
  std::map<std::string, Decl, std::less<>> decls_;
};

// Grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := rational '*' product | product | '0'
//   product := factor ('*' factor)*            infix '*' is mul/2
//   factor  := op '(' expr (',' expr)* ')' | var | '(' expr ')'
//   rational:= int ['/' posint]
// Variants are written name_k. Whitespace is insignificant.
Polynomial parse_polynomial(std::string_view text, const Signature& signature = {});

std::string format(const Monomial& m);
std::string format(const Polynomial& p);

// Statement file:
//   op <name>/<arity> [variants <n>]
//   [name:] expr [== expr]          an identity (lhs - rhs)
//   [name:] op(x,y,..) -> expr      a rewrite rule
// '#' starts a comment; an indented line continues the previous statement.
struct Document {
  Signature signature;
  std::vector<Identity> identities;
  std::vector<RewriteRule> rules;

  const Identity& identity(std::string_view name) const;
  const RewriteRule& rule(std::string_view name) const;
};

Document parse_document(std::string_view text);
std::string format_document(const std::vector<Identity>& identities);

}  // namespace forge
