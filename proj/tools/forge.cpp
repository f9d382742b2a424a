#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "forge/consequence.hpp"
#include "forge/fixtures.hpp"
#include "forge/kp.hpp"
#include "forge/leibniz_free.hpp"
#include "forge/parse.hpp"
#include "forge/replay.hpp"
#include "forge/rightcomm.hpp"
#include "forge/systems.hpp"

namespace {

using namespace forge;

constexpr const char* kFooter = R"(Expression grammar:
  expr    := ['+'|'-'] term (('+'|'-') term)*
  term    := rational '*' product | product | '0'
  product := factor ('*' factor)*           '*' is the binary product mul
  factor  := op '(' expr (',' expr)* ')' | var | '(' expr ')'
  rational:= int ['/' posint]
Variants of an operation are written name_k, e.g. br_1(a,b,c).

Identity files:
  op <name>/<arity> [variants <n>]
  name: expr [== expr]          an identity, stored as lhs - rhs
  name: op(x,y,..) -> expr      a rewrite rule
  '#' starts a comment; indented lines continue the previous statement.

System JSON:
  {"dim": 2, "basis": ["x","y"], "triple": {"x,y,x": "y", "y,x,x": "-1*y"}}
  Omitted triples are zero; values are linear combinations of basis names.

Envelope JSON:
  {"dim": 6, "basis": ["x",..,"x*y",..], "product": {"x,x*y": "-1*y", ...}}
)";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::vector<Variable> parse_vars(const std::string& list, int degree) {
  if (list.empty()) return letters(degree);
  std::vector<Variable> out;
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) out.emplace_back(item);
  return out;
}

std::vector<OpSymbol> signature_of(const std::vector<Identity>& ids) {
  std::set<OpSymbol> ops;
  for (const auto& id : ids) ops.merge(id.signature());
  return {ops.begin(), ops.end()};
}

int cmd_kp(const std::string& in, const std::string& out, bool full) {
  auto doc = parse_document(read_file(in));
  auto result = kp::kp_apply({{}, doc.identities});
  auto ids = result.part1_flat();
  if (full) {
    std::set<OpSymbol> ops;
    for (const auto& id : doc.identities) ops.merge(id.signature());
    for (const auto& op : ops) {
      auto more = kp::kp_part2_full(op);
      if (ops.size() > 1) {
        for (auto& m : more) m.name = op.name + "." + m.name;
      }
      ids.insert(ids.end(), more.begin(), more.end());
    }
  } else {
    ids.insert(ids.end(), result.part2.begin(), result.part2.end());
  }
  write_output(out, format_document(ids));
  return 0;
}

int cmd_span(const std::string& target_path, const std::string& gens_path, int degree,
             const std::string& var_list, bool lift) {
  auto targets = parse_document(read_file(target_path)).identities;
  auto sources = parse_document(read_file(gens_path)).identities;
  auto vars = parse_vars(var_list, degree);
  std::vector<consequence::Generator> gens;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    auto more = lift ? consequence::lifted_instances(sources[s], degree, vars, s)
                     : consequence::same_degree_instances(sources[s], vars, s);
    gens.insert(gens.end(), more.begin(), more.end());
  }
  auto all = sources;
  all.insert(all.end(), targets.begin(), targets.end());
  auto basis = consequence::enumerate_basis(signature_of(all), degree, vars);
  int status = 0;
  for (const auto& t : targets) {
    auto r = consequence::in_span(t.lhs, gens, basis);
    if (r.member) {
      std::cout << "PASS " << t.name << " = " << r.certificate.format() << "\n";
    } else {
      status = 1;
      std::cout << "FAIL " << t.name << ": not in span, witness "
                << format(basis.monomials().at(*r.witness)) << "\n";
    }
  }
  return status;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path, int degree,
              const std::string& var_list) {
  auto a = parse_document(read_file(a_path)).identities;
  auto b = parse_document(read_file(b_path)).identities;
  auto eq = consequence::sets_equivalent(a, b, degree, parse_vars(var_list, degree));
  auto print = [](const std::vector<Identity>& ids, const std::vector<consequence::SpanResult>& rs,
                  const char* side) {
    std::size_t k = 0;
    for (const auto& id : ids) {
      if (id.lhs.is_zero()) continue;
      const auto& r = rs.at(k++);
      std::cout << (r.member ? "PASS " : "FAIL ") << id.name << " in span(" << side << ")";
      if (r.member) std::cout << " = " << r.certificate.format();
      std::cout << "\n";
    }
  };
  print(b, eq.b_in_a, "A");
  print(a, eq.a_in_b, "B");
  std::cout << (eq.equivalent ? "equivalent" : "not equivalent") << "\n";
  return eq.equivalent ? 0 : 1;
}

int cmd_free_expand(const std::string& expr) {
  Signature sig;
  sig.declare("t", 3);
  auto p = parse_polynomial(expr, sig);
  bool ternary = std::any_of(p.operations().begin(), p.operations().end(),
                             [](const OpSymbol& op) { return op.arity == 3; });
  std::cout << leibniz::format(ternary ? leibniz::expand_ternary(p) : leibniz::expand_binary_tree(p))
            << "\n";
  return 0;
}

int cmd_free_check(const std::string& path) {
  int status = 0;
  for (const auto& id : parse_document(read_file(path)).identities) {
    bool ok = leibniz::holds_in_free(id);
    if (!ok) status = 1;
    std::cout << (ok ? "PASS " : "FAIL ") << id.name << "\n";
  }
  return status;
}

int cmd_jordan(const std::string& list, bool emit) {
  std::map<std::string, std::string> names{{"lts-a", "LTS-A"}, {"lts-b", "LTS-B"}, {"lts1", "LTS1"},
                                           {"lts2", "LTS2"},   {"lts3", "LTS3"}};
  const auto& rj = fixtures::identity("jordan", "RJ");
  const auto& ro = fixtures::identity("jordan", "RO");
  rightcomm::JordanSpan span(rj, ro);
  int status = 0;
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) {
    std::string key = item;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    auto it = names.find(key);
    if (it == names.end()) throw Error("unknown identity '" + item + "' (expected lts-a, lts-b, lts1, lts2, lts3)");
    auto target = rightcomm::permuted_associator_expand(fixtures::identity("lts", it->second));
    auto r = target.empty() ? consequence::SpanResult{true, {}, std::nullopt} : span.express(target);
    if (!r.member) status = 1;
    std::cout << (r.member ? "PASS " : "FAIL ") << it->second << ": " << target.size()
              << " straightened terms\n";
    if (emit) {
      std::cout << "  expansion: " << rightcomm::format(target) << "\n";
      if (r.member) std::cout << "  certificate: " << r.certificate.format() << "\n";
    }
  }
  return status;
}

void print_check(const char* what, const systems::CheckResult& r, const systems::TernaryStructureConstants& t,
                 std::size_t limit = 10) {
  std::cout << (r.ok ? "PASS " : "FAIL ") << what;
  if (!r.ok) std::cout << " (" << r.violations.size() << " violations)";
  std::cout << "\n";
  for (std::size_t i = 0; i < std::min(limit, r.violations.size()); ++i) {
    const auto& v = r.violations[i];
    std::cout << "  " << v.identity << "(";
    for (std::size_t k = 0; k < v.tuple.size(); ++k) {
      std::cout << (k ? "," : "") << (v.tuple[k] < t.dim ? t.basis[v.tuple[k]] : std::to_string(v.tuple[k]));
    }
    std::cout << ")\n";
  }
}

int cmd_verify(const std::string& path) {
  auto t = systems::parse_system_json(read_file(path));
  auto lts = systems::check_lts(t);
  print_check("Leibniz triple system (LTS-A, LTS-B)", lts, t);
  print_check("Lie triple system (L1, L2, L3)", systems::lie_triple_check(t), t);
  return lts.ok ? 0 : 1;
}

int cmd_envelope(const std::string& path, const std::string& emit, bool check) {
  auto t = systems::parse_system_json(read_file(path));
  auto u = systems::build_envelope(t);
  if (emit == "table") {
    std::cout << systems::table_text(u);
  } else if (emit == "json") {
    std::cout << systems::table_json(u);
  } else if (emit != "none") {
    throw Error("--emit must be table, json or none");
  }
  if (!check) return 0;
  auto r = systems::check_leibniz(u);
  std::cout << (r.ok ? "PASS" : "FAIL") << " Leibniz identity on " << u.dim * u.dim * u.dim
            << " basis triples";
  if (!r.ok) {
    const auto& v = r.violations.front();
    std::cout << " (first violation at " << u.basis[v.tuple[0]] << ", " << u.basis[v.tuple[1]] << ", "
              << u.basis[v.tuple[2]] << ")";
  }
  std::cout << "\n";
  return r.ok ? 0 : 1;
}

int cmd_classify2d(bool verify_known, bool print_equations, std::int64_t p, const std::string& mask_list) {
  auto q = systems::lts_equations(2);
  int status = 0;
  if (print_equations) {
    for (const auto& e : q.equations) std::cout << e.format() << "\n";
  }
  if (verify_known) {
    for (const char* name : {"8.1", "8.2", "8.3", "8.4"}) {
      auto t = fixtures::system(name);
      bool ok = systems::satisfies(q, t) && systems::check_lts(t).ok;
      if (!ok) status = 1;
      std::cout << (ok ? "PASS " : "FAIL ") << "system " << name << "\n";
    }
    auto res = systems::residuals(q, fixtures::system85_symbolic());
    bool ok = std::all_of(res.begin(), res.end(), [](const MPoly& r) { return r.is_zero(); });
    if (!ok) status = 1;
    std::cout << (ok ? "PASS " : "FAIL ") << "system 8.5 for symbolic zeta\n";
  }
  if (p > 0) {
    std::vector<std::string> mask;
    std::stringstream s(mask_list);
    std::string item;
    while (std::getline(s, item, ',')) mask.push_back(item);
    auto solutions = systems::search_fp(q, p, mask);
    std::cout << solutions.size() << " solutions over F_" << p << "\n";
    for (const auto& sol : solutions) {
      for (std::size_t i = 0; i < sol.size(); ++i) {
        std::cout << (i ? " " : "") << mask[i] << "=" << sol[i];
      }
      std::cout << "\n";
    }
  }
  return status;
}

int cmd_replay(const std::vector<std::string>& requested, bool json, bool parallel) {
  std::vector<std::string> names = requested;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = replay::sections();
  auto reports = replay::run_all(names, parallel);
  std::cout << (json ? replay::format_json(reports) : replay::format_text(reports));
  bool ok = std::all_of(reports.begin(), reports.end(), [](const replay::Report& r) { return r.pass(); });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forge: identities, dialgebras and Leibniz triple systems"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string in, out, target, gens, vars, a_path, b_path, expr, ids, check, system, emit = "table", mask;
  int degree = 0;
  bool full = false, lift = false, emit_cert = false, check_leibniz = false, verify_known = false,
       equations = false, json = false, parallel = false;
  std::int64_t prime = 0;
  std::vector<std::string> sections;

  auto* kp_cmd = app.add_subcommand("kp", "apply the dialgebra construction to an identity file");
  kp_cmd->add_option("--in", in, "identity file")->required();
  kp_cmd->add_option("--out", out, "output file (default stdout)");
  kp_cmd->add_flag("--full", full, "emit every interchange identity of Part 2");

  auto* span_cmd = app.add_subcommand("span", "certify targets as consequences of generators");
  span_cmd->add_option("--target", target, "identity file of targets")->required();
  span_cmd->add_option("--gens", gens, "identity file of generators")->required();
  span_cmd->add_option("--degree", degree, "degree of the targets")->required();
  span_cmd->add_option("--vars", vars, "comma-separated variables (default a,b,...)");
  span_cmd->add_flag("--lift", lift, "lift generators of degree-1 by one binary product");

  auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two identity sets");
  equiv_cmd->add_option("--a", a_path, "first identity file")->required();
  equiv_cmd->add_option("--b", b_path, "second identity file")->required();
  equiv_cmd->add_option("--degree", degree, "common degree")->required();
  equiv_cmd->add_option("--vars", vars, "comma-separated variables (default a,b,...)");

  auto* fe_cmd = app.add_subcommand("free-expand", "expand a product in the free Leibniz algebra");
  fe_cmd->add_option("--expr", expr, "expression in '*' or the ternary t(x,y,z)")->required();

  auto* fc_cmd = app.add_subcommand("free-check", "check identities for <<a,b>,c> in free Leibniz algebras");
  fc_cmd->add_option("--identities", ids, "identity file over t/3")->required();

  auto* jordan_cmd = app.add_subcommand("jordan", "reduce permuted associators modulo RJ and RO");
  jordan_cmd->add_option("--check", check, "comma list of lts-a, lts-b, lts1, lts2, lts3")->required();
  jordan_cmd->add_flag("--emit-certificate", emit_cert, "print expansions and certificates");

  auto* verify_cmd = app.add_subcommand("verify", "check a triple system given by structure constants");
  verify_cmd->add_option("--system", system, "system JSON")->required();

  auto* env_cmd = app.add_subcommand("envelope", "build the universal Leibniz envelope");
  env_cmd->add_option("--system", system, "system JSON")->required();
  env_cmd->add_option("--emit", emit, "table, json or none")->check(CLI::IsMember({"table", "json", "none"}));
  env_cmd->add_flag("--check-leibniz", check_leibniz, "verify the Leibniz identity on basis triples");

  auto* c2_cmd = app.add_subcommand("classify2d", "quadratic equations of 2-dimensional systems");
  c2_cmd->add_flag("--verify-known", verify_known, "check the known systems against the equations");
  c2_cmd->add_flag("--equations", equations, "print the equations");
  c2_cmd->add_option("--search-fp", prime, "exhaustive search over F_p");
  c2_cmd->add_option("--mask", mask, "comma list of free unknowns, e.g. alpha_122,alpha_222");

  auto* replay_cmd = app.add_subcommand("replay", "rerun the checks for one or more sections");
  replay_cmd->add_option("sections", sections, "section names or 'all'");
  replay_cmd->add_flag("--json", json, "JSON report");
  replay_cmd->add_flag("--parallel", parallel, "run sections concurrently");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*kp_cmd) return cmd_kp(in, out, full);
    if (*span_cmd) return cmd_span(target, gens, degree, vars, lift);
    if (*equiv_cmd) return cmd_equiv(a_path, b_path, degree, vars);
    if (*fe_cmd) return cmd_free_expand(expr);
    if (*fc_cmd) return cmd_free_check(ids);
    if (*jordan_cmd) return cmd_jordan(check, emit_cert);
    if (*verify_cmd) return cmd_verify(system);
    if (*env_cmd) return cmd_envelope(system, emit, check_leibniz);
    if (*c2_cmd) {
      if (!verify_known && !equations && prime == 0) {
        throw Error("classify2d needs --verify-known, --equations or --search-fp");
      }
      return cmd_classify2d(verify_known, equations, prime, mask);
    }
    if (*replay_cmd) return cmd_replay(sections, json, parallel);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
