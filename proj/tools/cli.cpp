#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "ternary/arith.hpp"
#include "ternary/legendre.hpp"
#include "ternary/oracle.hpp"
#include "ternary/report.hpp"

namespace ternary::cli {

namespace {

struct Coefficients {
  std::string a, b, c;
  std::string max_coeff;
  bool json = false;
};

struct Parsed {
  std::optional<NormalEquation> normal;
  std::optional<GeneralEquation> general;
  Integer max_coefficient = kDefaultMaxCoefficient;

  Json equation() const { return normal ? equation_json(*normal) : equation_json(*general); }
};

void add_coefficients(CLI::App* cmd, Coefficients& c) {
  cmd->add_option("--a", c.a, "coefficient a")->required();
  cmd->add_option("--b", c.b, "coefficient b")->required();
  cmd->add_option("--c", c.c, "coefficient c (omit for a x^2 + b y^2 = z^2)");
  cmd->add_option("--max-coeff", c.max_coeff, "largest accepted |coefficient|");
  cmd->add_flag("--json", c.json, "machine-readable output");
}

// Throws InvalidArgument (or HypothesisError) on malformed input.
Parsed parse(const Coefficients& c) {
  Parsed p;
  if (!c.max_coeff.empty()) p.max_coefficient = parse_integer(c.max_coeff);
  Integer a = parse_integer(c.a);
  Integer b = parse_integer(c.b);
  if (c.c.empty()) {
    p.normal = NormalEquation{a, b};
  } else {
    p.general = GeneralEquation{a, b, parse_integer(c.c)};
  }
  return p;
}

// Raw text for echoing an equation when its coefficients fail to parse.
Json raw_equation(const Coefficients& c) {
  Json j;
  j["form"] = c.c.empty() ? "normal" : "general";
  j["a"] = c.a;
  j["b"] = c.b;
  if (!c.c.empty()) j["c"] = c.c;
  return j;
}

std::string term(const Integer& coeff, const char* var, bool first) {
  std::ostringstream s;
  if (first) {
    s << (coeff < 0 ? "-" : "");
  } else {
    s << (coeff < 0 ? " - " : " + ");
  }
  if (abs(coeff) != 1) s << abs(coeff);
  s << var << "^2";
  return s.str();
}

std::string describe(const NormalEquation& eq) {
  return term(eq.a, "x", true) + term(eq.b, "y", false) + " = z^2";
}

std::string describe(const GeneralEquation& eq) {
  return term(eq.a, "x", true) + term(eq.b, "y", false) + term(eq.c, "z", false) + " = 0";
}

std::string triple(const Solution& s) {
  std::ostringstream o;
  o << s.x << ' ' << s.y << ' ' << s.z;
  return o.str();
}

std::string failure_line(std::string_view name, const Integer& value, const Integer& modulus,
                         const Integer& prime) {
  std::ostringstream o;
  o << name << " fails: " << value << " is not a square mod " << prime;
  if (prime != modulus) o << " (a prime factor of " << modulus << ")";
  return o.str();
}

void print_trace(std::ostream& out, const DescentTrace& trace) {
  out << "trace: " << trace.length() << " step(s)\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    const bool on_a = s.side == ReductionSide::ReduceA;
    out << "  step " << s.index << ": reduce " << (on_a ? "a" : "b") << ", "
        << (on_a ? "beta" : "alpha") << " = " << s.root << ", k = " << s.k << " = " << s.h
        << "^2 * " << s.new_coeff << ", now " << describe(s.after()) << "\n"
        << "          lifted solution of " << describe(s.before()) << ": "
        << triple(trace.lifted[i]) << "\n";
  }
  out << "base: " << base_case_name(trace.base.kind) << " on " << describe(trace.base_equation)
      << ", solution " << triple(trace.base.solution);
  if (trace.base.two_squares) {
    out << " (" << trace.base.two_squares->n << " = " << trace.base.two_squares->r << "^2 + "
        << trace.base.two_squares->s << "^2)";
  }
  out << "\nraw solution: " << triple(trace.raw_solution) << "\n";
}

void print_witness(std::ostream& out, std::string_view name, std::string_view label,
                   const Integer& value, const Integer& modulus,
                   const std::optional<ResidueWitness>& w) {
  out << name << " (" << label << "): " << value << " mod " << modulus;
  if (w) {
    out << " holds, root " << w->root << "\n";
  } else {
    auto prime = first_nonresidue_prime(value, modulus);
    out << " fails (no root mod " << *prime << ")\n";
  }
}

void print_normal_conditions(std::ostream& out, const NormalEquation& eq,
                             const NormalConditions& c) {
  out << "d = " << c.d << "\n";
  auto row = [&](NormCondition cond, std::string_view label,
                 const std::optional<ResidueWitness>& w) {
    auto [value, modulus] = c.subject(cond, eq);
    print_witness(out, condition_name(cond), label, value, modulus, w);
  };
  row(NormCondition::AResidueModB, "a R b", c.a_mod_b);
  row(NormCondition::BResidueModA, "b R a", c.b_mod_a);
  row(NormCondition::NegProductModD, "-(a/d)(b/d) R d", c.neg_product_mod_d);
}

void print_general_conditions(std::ostream& out, const GeneralEquation& eq,
                              const LegendreConditions& c) {
  auto row = [&](LegCondition cond, std::string_view label,
                 const std::optional<ResidueWitness>& w) {
    auto [value, modulus] = condition_subject(cond, eq);
    print_witness(out, condition_name(cond), label, value, modulus, w);
  };
  row(LegCondition::NegABModC, "-ab R c", c.neg_ab_mod_c);
  row(LegCondition::NegBCModA, "-bc R a", c.neg_bc_mod_a);
  row(LegCondition::NegACModB, "-ac R b", c.neg_ac_mod_b);
}

int report_invalid(const Coefficients& c, const std::string& message, std::ostream& out,
                   std::ostream& err) {
  if (c.json) {
    out << invalid_report_json(raw_equation(c), message).dump(2) << "\n";
  }
  err << "error: " << message << "\n";
  return kInvalidInput;
}

int cmd_solve(const Coefficients& c, bool show_trace, bool tables, std::ostream& out) {
  Parsed p = parse(c);
  ReportOptions options{show_trace, tables};
  if (p.normal) {
    NormalEquation eq = validate_input(*p.normal, p.max_coefficient);
    NormalOutcome outcome = solve_normal(eq);
    const bool ok = std::holds_alternative<NormalSolved>(outcome);
    if (c.json) {
      out << report_json(eq, outcome, options).dump(2) << "\n";
      return ok ? kSolvable : kUnsolvable;
    }
    out << "equation: " << describe(eq) << "\n";
    if (const auto* s = std::get_if<NormalSolved>(&outcome)) {
      out << "result: solvable\nsolution: " << triple(s->solution) << "\n"
          << "bound: " << s->trace.bound << "\n";
      if (show_trace) print_trace(out, s->trace);
      return kSolvable;
    }
    const auto& u = std::get<NormalUnsolvable>(outcome);
    out << "result: no_solution\n"
        << failure_line(condition_name(u.failed), u.value, u.modulus, u.prime) << "\n";
    if (tables) {
      out << "squares mod " << u.prime << ":";
      for (const auto& r : residue_table(u.prime)) out << ' ' << r;
      out << "\n";
    }
    return kUnsolvable;
  }

  GeneralEquation eq = validate_input(*p.general, p.max_coefficient);
  GeneralOutcome outcome = solve_general(eq, p.max_coefficient);
  const bool ok = std::holds_alternative<GeneralSolved>(outcome);
  if (c.json) {
    out << report_json(eq, outcome, options).dump(2) << "\n";
    return ok ? kSolvable : kUnsolvable;
  }
  out << "equation: " << describe(eq) << "\n";
  if (const auto* s = std::get_if<GeneralSolved>(&outcome)) {
    out << "result: solvable\nsolution: " << triple(s->solution) << "\n"
        << "normal form: " << describe(s->normal) << "\n"
        << "bound: " << s->trace.bound << "\n";
    if (show_trace) print_trace(out, s->trace);
    return kSolvable;
  }
  const auto& u = std::get<GeneralUnsolvable>(outcome);
  if (u.canonicalization.canonical != eq) {
    out << "canonical form: " << describe(u.canonicalization.canonical) << "\n";
  }
  out << "result: no_solution\n"
      << failure_line(condition_name(u.failed), u.value, u.modulus, u.prime) << "\n";
  if (tables) {
    out << "squares mod " << u.prime << ":";
    for (const auto& r : residue_table(u.prime)) out << ' ' << r;
    out << "\n";
  }
  return kUnsolvable;
}

int cmd_check(const Coefficients& c, std::ostream& out) {
  Parsed p = parse(c);
  if (p.normal) {
    NormalEquation eq = validate_input(*p.normal, p.max_coefficient);
    NormalConditions cond = check_normal_conditions(eq);
    if (c.json) {
      Json j = conditions_json(eq, cond);
      j["equation"] = equation_json(eq);
      out << j.dump(2) << "\n";
    } else {
      out << "equation: " << describe(eq) << "\n";
      print_normal_conditions(out, eq, cond);
    }
    return cond.all_hold() ? kSolvable : kUnsolvable;
  }
  GeneralEquation eq = validate_input(*p.general, p.max_coefficient);
  Canonicalization canon = canonicalize(eq);
  LegendreConditions cond = check_legendre_conditions(canon.canonical);
  if (c.json) {
    Json j = conditions_json(canon.canonical, cond);
    j["equation"] = equation_json(eq);
    j["canonical_equation"] = equation_json(canon.canonical);
    j["pairwise_gcd"] = {"1", "1", "1"};
    out << j.dump(2) << "\n";
  } else {
    out << "equation: " << describe(eq) << "\n";
    if (canon.canonical != eq) out << "canonical form: " << describe(canon.canonical) << "\n";
    out << "square-free: yes; gcd(a,b) = gcd(a,c) = gcd(b,c) = 1\n";
    print_general_conditions(out, canon.canonical, cond);
  }
  return cond.all_hold() ? kSolvable : kUnsolvable;
}

bool pairwise_coprime(const Solution& s) {
  return gcd(s.x, s.y) == 1 && gcd(s.x, s.z) == 1 && gcd(s.y, s.z) == 1;
}

int cmd_verify(const Coefficients& c, const std::string& xs, const std::string& ys,
               const std::string& zs, std::ostream& out) {
  Parsed p = parse(c);
  Solution s{abs(parse_integer(xs)), abs(parse_integer(ys)), abs(parse_integer(zs))};
  bool ok = false;
  std::optional<Json> witnesses;
  std::ostringstream detail;
  if (p.normal) {
    NormalEquation eq = validate_input(*p.normal, p.max_coefficient);
    ok = satisfies(eq, s);
    if (ok && pairwise_coprime(s)) {
      NormalConditions w = extract_necessity_witnesses(eq, s);
      witnesses = conditions_json(eq, w);
      print_normal_conditions(detail, eq, w);
    }
  } else {
    GeneralEquation eq = validate_input(*p.general, p.max_coefficient);
    ok = satisfies(eq, s);
    if (ok && pairwise_coprime(s)) {
      LegendreConditions w = extract_necessity_witnesses(eq, s);
      witnesses = conditions_json(eq, w);
      print_general_conditions(detail, eq, w);
    }
  }
  if (c.json) {
    Json j;
    j["equation"] = p.equation();
    j["solution"] = solution_json(s);
    j["valid"] = ok;
    j["primitive"] = ok && pairwise_coprime(s);
    if (witnesses) j["necessity_witnesses"] = *witnesses;
    out << j.dump(2) << "\n";
  } else {
    out << (ok ? "valid: " : "not a solution: ") << triple(s) << "\n";
    if (witnesses) out << "primitive; residue witnesses read off the solution:\n" << detail.str();
  }
  return ok ? kSolvable : kUnsolvable;
}

int cmd_oracle(const Coefficients& c, const std::string& limit_text, std::ostream& out) {
  Parsed p = parse(c);
  Integer limit = parse_integer(limit_text);
  auto hit = p.normal ? brute_force_normal(p.normal->a, p.normal->b, limit)
                      : brute_force_general(p.general->a, p.general->b, p.general->c, limit);
  if (c.json) {
    Json j;
    j["equation"] = p.equation();
    j["limit"] = to_string(limit);
    j["solution"] = hit ? solution_json(*hit) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else if (hit) {
    out << "first hit: " << triple(*hit) << "\n";
  } else {
    out << "no nontrivial solution with components <= " << limit << "\n";
  }
  return hit ? kSolvable : kUnsolvable;
}

int cmd_residues(const std::string& modulus, bool json, std::ostream& out) {
  Integer m = parse_integer(modulus);
  auto table = residue_table(m);
  if (json) {
    Json j;
    j["modulus"] = to_string(m);
    j["residues"] = Json::array();
    for (const auto& r : table) j["residues"].push_back(to_string(r));
    out << j.dump(2) << "\n";
  } else {
    out << "squares mod " << m << ":";
    for (const auto& r : table) out << ' ' << r;
    out << "\n";
  }
  return kSolvable;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and solve a x^2 + b y^2 = z^2 and a x^2 + b y^2 + c z^2 = 0"};
  app.require_subcommand(1);

  Coefficients solve_c, check_c, verify_c, oracle_c;
  bool trace = false;
  bool tables = false;
  auto* solve = app.add_subcommand("solve", "find a nontrivial solution or prove there is none");
  add_coefficients(solve, solve_c);
  solve->add_flag("--trace", trace, "include the full descent trace");
  solve->add_flag("--tables", tables, "print the residue table behind a refusal");

  auto* check = app.add_subcommand("check", "report each solvability condition and its witness");
  add_coefficients(check, check_c);

  std::string x, y, z;
  auto* verify = app.add_subcommand("verify", "check a candidate solution");
  add_coefficients(verify, verify_c);
  verify->add_option("--x", x)->required();
  verify->add_option("--y", y)->required();
  verify->add_option("--z", z)->required();

  std::string limit = "1000";
  auto* oracle = app.add_subcommand("oracle", "exhaustive search for the first small solution");
  add_coefficients(oracle, oracle_c);
  oracle->add_option("--limit", limit, "largest component scanned");

  std::string modulus;
  bool residues_json = false;
  auto* residues = app.add_subcommand("residues", "list the squares modulo m");
  residues->add_option("--mod", modulus)->required();
  residues->add_flag("--json", residues_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSolvable;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const Coefficients* active = &solve_c;
  try {
    if (*solve) return cmd_solve(solve_c, trace, tables, out);
    if (*check) {
      active = &check_c;
      return cmd_check(check_c, out);
    }
    if (*verify) {
      active = &verify_c;
      return cmd_verify(verify_c, x, y, z, out);
    }
    if (*oracle) {
      active = &oracle_c;
      return cmd_oracle(oracle_c, limit, out);
    }
    return cmd_residues(modulus, residues_json, out);
  } catch (const InvalidArgument& e) {
    return report_invalid(*active, e.what(), out, err);
  }
}

}  // namespace ternary::cli
