#include "ternary/report.hpp"

#include <algorithm>

#include "ternary/arith.hpp"
#include "ternary/oracle.hpp"

namespace ternary {

namespace {

std::string str(const Integer& n) { return to_string(n); }

Integer num(const Json& j) { return parse_integer(j.get<std::string>()); }

Solution triple(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidArgument("expected a triple");
  return {num(j[0]), num(j[1]), num(j[2])};
}

Json failure_json(std::string_view name, const Integer& value, const Integer& modulus,
                  const Integer& prime, const ReportOptions& options) {
  Json j;
  j["name"] = std::string(name);
  j["value"] = str(value);
  j["modulus"] = str(modulus);
  j["prime"] = str(prime);
  if (options.tables) {
    j["value_mod_prime"] = str(floor_mod(value, prime));
    Json table = Json::array();
    for (const auto& r : residue_table(prime)) table.push_back(str(r));
    j["residues_mod_prime"] = std::move(table);
  }
  return j;
}

void solved_fields(Json& j, const DescentTrace& trace, const ReportOptions& options) {
  j["bound"] = str(trace.bound);
  j["raw_solution"] = solution_json(trace.raw_solution);
  Json base;
  base["kind"] = std::string(base_case_name(trace.base.kind));
  base["A"] = str(trace.base_equation.a);
  base["B"] = str(trace.base_equation.b);
  base["solution"] = solution_json(trace.base.solution);
  if (trace.base.two_squares) {
    base["two_squares"] = Json::array({str(trace.base.two_squares->r),
                                       str(trace.base.two_squares->s)});
  }
  j["base_case"] = std::move(base);
  if (options.trace) j["trace"] = trace_json(trace);
}

}  // namespace

Json equation_json(const NormalEquation& eq) {
  Json j;
  j["form"] = "normal";
  j["a"] = str(eq.a);
  j["b"] = str(eq.b);
  return j;
}

Json equation_json(const GeneralEquation& eq) {
  Json j;
  j["form"] = "general";
  j["a"] = str(eq.a);
  j["b"] = str(eq.b);
  j["c"] = str(eq.c);
  return j;
}

Json solution_json(const Solution& s) { return Json::array({str(s.x), str(s.y), str(s.z)}); }

Json trace_json(const DescentTrace& trace) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    NormalEquation after = step.after();
    Json s;
    s["i"] = std::to_string(step.index);
    s["side"] = step.side == ReductionSide::ReduceA ? "reduce_a" : "reduce_b";
    s["root"] = str(step.root);
    s["h"] = str(step.h);
    s["k"] = str(step.k);
    s["A"] = str(after.a);
    s["B"] = str(after.b);
    s["lifted"] = solution_json(trace.lifted[i]);
    steps.push_back(std::move(s));
  }
  return steps;
}

Json report_json(const NormalEquation& eq, const NormalOutcome& outcome,
                 const ReportOptions& options) {
  Json j;
  j["equation"] = equation_json(eq);
  if (const auto* solved = std::get_if<NormalSolved>(&outcome)) {
    j["result"] = "solvable";
    j["solution"] = solution_json(solved->solution);
    solved_fields(j, solved->trace, options);
  } else {
    const auto& u = std::get<NormalUnsolvable>(outcome);
    j["result"] = "no_solution";
    j["failed_condition"] =
        failure_json(condition_name(u.failed), u.value, u.modulus, u.prime, options);
  }
  return j;
}

Json report_json(const GeneralEquation& eq, const GeneralOutcome& outcome,
                 const ReportOptions& options) {
  Json j;
  j["equation"] = equation_json(eq);
  if (const auto* solved = std::get_if<GeneralSolved>(&outcome)) {
    j["result"] = "solvable";
    j["solution"] = solution_json(solved->solution);
    j["canonical_equation"] = equation_json(solved->canonicalization.canonical);
    j["normal_equation"] = equation_json(solved->normal);
    solved_fields(j, solved->trace, options);
  } else {
    const auto& u = std::get<GeneralUnsolvable>(outcome);
    j["result"] = "no_solution";
    j["canonical_equation"] = equation_json(u.canonicalization.canonical);
    j["failed_condition"] =
        failure_json(condition_name(u.failed), u.value, u.modulus, u.prime, options);
  }
  return j;
}

Json invalid_report_json(Json equation, const std::string& error) {
  Json j;
  j["equation"] = std::move(equation);
  j["result"] = "invalid";
  j["error"] = error;
  return j;
}

Json witness_json(const std::optional<ResidueWitness>& w) {
  if (!w) return nullptr;
  Json j;
  j["value"] = str(w->value);
  j["modulus"] = str(w->modulus);
  j["root"] = str(w->root);
  return j;
}

Json conditions_json(const NormalEquation& eq, const NormalConditions& c) {
  Json j;
  j["d"] = str(c.d);
  const std::pair<NormCondition, const std::optional<ResidueWitness>*> rows[] = {
      {NormCondition::AResidueModB, &c.a_mod_b},
      {NormCondition::BResidueModA, &c.b_mod_a},
      {NormCondition::NegProductModD, &c.neg_product_mod_d}};
  Json list = Json::array();
  for (const auto& [cond, w] : rows) {
    auto [value, modulus] = c.subject(cond, eq);
    Json row;
    row["name"] = std::string(condition_name(cond));
    row["value"] = str(value);
    row["modulus"] = str(modulus);
    row["holds"] = w->has_value();
    row["root"] = *w ? Json(str((*w)->root)) : Json(nullptr);
    list.push_back(std::move(row));
  }
  j["conditions"] = std::move(list);
  return j;
}

Json conditions_json(const GeneralEquation& eq, const LegendreConditions& c) {
  Json j;
  const std::pair<LegCondition, const std::optional<ResidueWitness>*> rows[] = {
      {LegCondition::NegABModC, &c.neg_ab_mod_c},
      {LegCondition::NegBCModA, &c.neg_bc_mod_a},
      {LegCondition::NegACModB, &c.neg_ac_mod_b}};
  Json list = Json::array();
  for (const auto& [cond, w] : rows) {
    auto [value, modulus] = condition_subject(cond, eq);
    Json row;
    row["name"] = std::string(condition_name(cond));
    row["value"] = str(value);
    row["modulus"] = str(modulus);
    row["holds"] = w->has_value();
    row["root"] = *w ? Json(str((*w)->root)) : Json(nullptr);
    list.push_back(std::move(row));
  }
  j["conditions"] = std::move(list);
  return j;
}

std::vector<std::string> check_report(const Json& report) {
  std::vector<std::string> problems;
  auto fail = [&](std::string msg) { problems.push_back(std::move(msg)); };
  try {
    if (report.at("result") != "solvable") {
      fail("report is not a solvable result");
      return problems;
    }
    if (!report.contains("trace")) {
      fail("report carries no trace");
      return problems;
    }
    const Json& eq = report.at("equation");
    const Json& normal = eq.at("form") == "general" ? report.at("normal_equation") : eq;
    Integer a = num(normal.at("a"));
    Integer b = num(normal.at("b"));
    auto solves = [](const Integer& p, const Integer& q, const Solution& s) {
      return !s.is_trivial() && p * s.x * s.x + q * s.y * s.y == s.z * s.z;
    };

    struct Level {
      Integer a, b, root, h, new_coeff;
      bool reduce_a;
      Solution lifted;
    };
    std::vector<Level> levels;
    Integer cur_a = a, cur_b = b;
    for (const auto& step : report.at("trace")) {
      Level lv{cur_a, cur_b, num(step.at("root")), num(step.at("h")), 0,
               step.at("side") == "reduce_a", triple(step.at("lifted"))};
      Integer k = num(step.at("k"));
      Integer next_a = num(step.at("A"));
      Integer next_b = num(step.at("B"));
      const std::string tag = "step " + step.at("i").get<std::string>() + ": ";
      const Integer& prev = lv.reduce_a ? cur_a : cur_b;
      const Integer& fixed = lv.reduce_a ? cur_b : cur_a;
      lv.new_coeff = lv.reduce_a ? next_a : next_b;
      if ((lv.reduce_a ? next_b : next_a) != fixed) fail(tag + "fixed coefficient changed");
      if (lv.root * lv.root - fixed != lv.h * lv.h * lv.new_coeff * prev) {
        fail(tag + "root^2 - fixed != h^2 * new * previous");
      }
      if (k != lv.h * lv.h * lv.new_coeff) fail(tag + "k != h^2 * new");
      if (!(4 * lv.new_coeff * lv.h < prev)) fail(tag + "new * h >= previous / 4");
      if (!(2 * lv.root <= prev)) fail(tag + "root exceeds previous / 2");
      if (!solves(cur_a, cur_b, lv.lifted)) fail(tag + "lifted triple does not solve its level");
      levels.push_back(lv);
      cur_a = next_a;
      cur_b = next_b;
    }

    const Json& base = report.at("base_case");
    if (num(base.at("A")) != cur_a || num(base.at("B")) != cur_b) {
      fail("base equation does not match the last step");
    }
    if (!(cur_a == 1 || cur_b == 1 || cur_a == cur_b)) fail("base equation is not terminal");
    Solution current = triple(base.at("solution"));
    if (!solves(cur_a, cur_b, current)) fail("base solution does not solve the base equation");

    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
      const Level& lv = *it;
      Solution up = lv.reduce_a
                        ? Solution{lv.new_coeff * current.x * lv.h, current.z + current.y * lv.root,
                                   current.z * lv.root + lv.b * current.y}
                        : Solution{current.z + current.x * lv.root, lv.new_coeff * current.y * lv.h,
                                   current.z * lv.root + lv.a * current.x};
      if (up != lv.lifted) fail("reported lift differs from the recomputed lift");
      current = lv.lifted;
    }
    if (triple(report.at("raw_solution")) != current) fail("raw solution is not the top lift");

    Solution final_normal = current;
    Integer bound = num(report.at("bound"));
    auto la = ceil_log4(a), lb = ceil_log4(b);
    Integer numerator = b * pow(3 * a, la) * pow(3 * b, lb);
    Integer denominator = pow(Integer(2), la + lb);
    if (bound * denominator < numerator || (bound - 1) * denominator >= numerator) {
      fail("bound is not the ceiling of the closed form");
    }
    if (std::max({final_normal.x, final_normal.y, final_normal.z}) > bound) {
      fail("raw solution exceeds the bound");
    }

    Solution sol = triple(report.at("solution"));
    if (eq.at("form") == "general") {
      Integer ga = num(eq.at("a")), gb = num(eq.at("b")), gc = num(eq.at("c"));
      if (sol.is_trivial() || ga * sol.x * sol.x + gb * sol.y * sol.y + gc * sol.z * sol.z != 0) {
        fail("final solution does not solve the equation");
      }
    } else if (!solves(a, b, sol)) {
      fail("final solution does not solve the equation");
    }
  } catch (const std::exception& e) {
    fail(std::string("malformed report: ") + e.what());
  }
  return problems;
}

}  // namespace ternary
