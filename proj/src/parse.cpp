#include "forge/parse.hpp"

#include <cctype>
#include <sstream>

namespace forge {

Signature::Signature() { declare(kMul); }

void Signature::declare(const std::string& name, int arity, int variants) {
  if (name.empty()) throw Error("operation names must be nonempty");
  if (arity <= 0) throw Error("operation '" + name + "' must have positive arity");
  if (variants < 0) throw Error("negative variant count for '" + name + "'");
  auto [it, inserted] = decls_.try_emplace(name, Decl{arity, variants});
  if (!inserted) {
    if (it->second.arity != arity) {
      throw Error("operation '" + name + "' redeclared with a different arity");
    }
    it->second.variants = std::max(it->second.variants, variants);
  }
}

void Signature::declare(const OpSymbol& op) { declare(op.name, op.arity, op.variant); }

void Signature::merge(const Signature& other) {
  for (const auto& [name, d] : other.decls_) declare(name, d.arity, d.variants);
}

std::optional<OpSymbol> Signature::resolve(std::string_view identifier) const {
  if (auto it = decls_.find(identifier); it != decls_.end()) {
    return OpSymbol{it->first, it->second.arity, 0};
  }
  auto underscore = identifier.rfind('_');
  if (underscore == std::string_view::npos || underscore + 1 == identifier.size()) {
    return std::nullopt;
  }
  auto suffix = identifier.substr(underscore + 1);
  for (char ch : suffix) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  }
  auto it = decls_.find(identifier.substr(0, underscore));
  if (it == decls_.end()) return std::nullopt;
  int variant = std::stoi(std::string(suffix));
  if (variant < 1 || variant > it->second.variants) return std::nullopt;
  return OpSymbol{it->first, it->second.arity, variant};
}

std::vector<OpSymbol> Signature::symbols() const {
  std::vector<OpSymbol> out;
  for (const auto& [name, d] : decls_) {
    out.push_back({name, d.arity, 0});
    for (int k = 1; k <= d.variants; ++k) out.push_back({name, d.arity, k});
  }
  return out;
}

std::string Signature::declarations() const {
  std::string out;
  for (const auto& [name, d] : decls_) {
    if (name == kMul.name) continue;
    out += "op " + name + "/" + std::to_string(d.arity);
    if (d.variants > 0) out += " variants " + std::to_string(d.variants);
    out += "\n";
  }
  return out;
}

Signature Signature::of(const std::set<OpSymbol>& ops) {
  Signature s;
  for (const auto& op : ops) s.declare(op);
  return s;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, std::size_t offset)
      : text_(text), sig_(sig), offset_(offset) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, offset_ + pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial out;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    while (true) {
      Polynomial t = term();
      if (negative) {
        out -= t;
      } else {
        out += t;
      }
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return out;
  }

  Polynomial term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        if (dstart == pos_) fail("expected denominator");
      }
      Rational c;
      try {
        c = parse_rational(text_.substr(start, pos_ - start));
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
      if (!accept('*')) {
        if (c != 0) fail("a nonzero scalar must multiply a monomial");
        return {};
      }
      return c * product();
    }
    return product();
  }

  Polynomial product() {
    Polynomial p = factor();
    while (accept('*')) p = mul(p, factor());
    return p;
  }

  Polynomial factor() {
    if (accept('(')) {
      Polynomial p = expr();
      expect(')');
      return p;
    }
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected a variable or operation");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string_view ident = text_.substr(start, pos_ - start);
    if (!accept('(')) return Polynomial::variable(std::string(ident));
    auto op = sig_.resolve(ident);
    if (!op) {
      pos_ = start;
      fail("unknown operation '" + std::string(ident) + "'");
    }
    std::vector<Polynomial> args{expr()};
    while (accept(',')) args.push_back(expr());
    std::size_t close = pos_;
    expect(')');
    if (static_cast<int>(args.size()) != op->arity) {
      pos_ = close;
      fail("operation '" + std::string(ident) + "' has arity " + std::to_string(op->arity) +
           " but was given " + std::to_string(args.size()) + " arguments");
    }
    return apply_op(*op, args);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

void format_into(std::string& out, const Monomial& m) {
  if (m.is_leaf()) {
    out += m.variable().name();
    return;
  }
  if (m.op() == kMul) {
    for (int i = 0; i < 2; ++i) {
      const auto& a = m.args()[i];
      bool wrap = !a.is_leaf() && a.op() == kMul;
      if (i == 1) out += '*';
      if (wrap) out += '(';
      format_into(out, a);
      if (wrap) out += ')';
    }
    return;
  }
  out += m.op().display();
  out += '(';
  bool first = true;
  for (const auto& a : m.args()) {
    if (!first) out += ',';
    first = false;
    format_into(out, a);
  }
  out += ')';
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Signature& signature) {
  return Parser(text, signature, 0).parse_all();
}

std::string format(const Monomial& m) {
  std::string out;
  format_into(out, m);
  return out;
}

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    format_into(out, m);
  }
  return out;
}

const Identity& Document::identity(std::string_view name) const {
  for (const auto& id : identities) {
    if (id.name == name) return id;
  }
  throw Error("no identity named '" + std::string(name) + "'");
}

const RewriteRule& Document::rule(std::string_view name) const {
  for (const auto& r : rules) {
    if (r.name == name) return r;
  }
  throw Error("no rule named '" + std::string(name) + "'");
}

Document parse_document(std::string_view text) {
  struct Statement {
    std::string body;
    std::size_t offset;
  };
  std::vector<Statement> statements;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = trim(line).empty();
    bool continuation = !line.empty() && std::isspace(static_cast<unsigned char>(line[0]));
    if (!blank) {
      if (continuation && !statements.empty()) {
        statements.back().body += " " + std::string(line);
      } else {
        statements.push_back({std::string(line), line_start});
      }
    }
    line_start = line_end + 1;
  }

  Document doc;
  int unnamed = 0;
  for (const auto& st : statements) {
    std::string body = trim(st.body);
    if (body.rfind("op ", 0) == 0) {
      std::istringstream in(body.substr(3));
      std::string spec;
      in >> spec;
      auto slash = spec.find('/');
      if (slash == std::string::npos) throw ParseError("expected op <name>/<arity>", st.offset);
      int arity = 0;
      try {
        arity = std::stoi(spec.substr(slash + 1));
      } catch (const std::exception&) {
        throw ParseError("malformed arity in '" + spec + "'", st.offset);
      }
      int variants = 0;
      std::string word;
      if (in >> word) {
        if (word != "variants" || !(in >> variants)) {
          throw ParseError("expected 'variants <n>'", st.offset);
        }
      }
      doc.signature.declare(spec.substr(0, slash), arity, variants);
      continue;
    }
    std::string name;
    std::size_t body_offset = 0;
    if (auto colon = body.find(':'); colon != std::string::npos) {
      name = trim(body.substr(0, colon));
      body_offset = colon + 1;
    } else {
      name = "#" + std::to_string(++unnamed);
    }
    std::string_view rest = std::string_view(body).substr(body_offset);
    auto parse_part = [&](std::string_view part, std::size_t at) {
      return Parser(part, doc.signature, st.offset + body_offset + at).parse_all();
    };
    if (auto arrow = rest.find("->"); arrow != std::string_view::npos) {
      Polynomial lhs = parse_part(rest.substr(0, arrow), 0);
      Polynomial rhs = parse_part(rest.substr(arrow + 2), arrow + 2);
      if (lhs.size() != 1 || lhs.terms().begin()->second != 1) {
        throw ParseError("rule pattern must be a single operation application", st.offset);
      }
      doc.rules.push_back(RewriteRule::make(name, lhs.terms().begin()->first, rhs));
    } else if (auto eq = rest.find("=="); eq != std::string_view::npos) {
      Polynomial lhs = parse_part(rest.substr(0, eq), 0);
      Polynomial rhs = parse_part(rest.substr(eq + 2), eq + 2);
      doc.identities.push_back(Identity::from(name, lhs - rhs));
    } else {
      doc.identities.push_back(Identity::from(name, parse_part(rest, 0)));
    }
  }
  return doc;
}

std::string format_document(const std::vector<Identity>& identities) {
  std::set<OpSymbol> ops;
  for (const auto& id : identities) ops.merge(id.signature());
  std::string out = Signature::of(ops).declarations();
  for (const auto& id : identities) out += id.name + ": " + format(id.lhs) + "\n";
  return out;
}

}  // namespace forge
