#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ternary/descent.hpp"
#include "ternary/legendre.hpp"

namespace ternary {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  bool trace = false;
  /// Attach the residue table of the failing prime to no_solution reports.
  bool tables = false;
};

// All integers are written as decimal strings.

Json equation_json(const NormalEquation& eq);
Json equation_json(const GeneralEquation& eq);

Json solution_json(const Solution& s);

Json trace_json(const DescentTrace& trace);

Json report_json(const NormalEquation& eq, const NormalOutcome& outcome,
                 const ReportOptions& options = {});
Json report_json(const GeneralEquation& eq, const GeneralOutcome& outcome,
                 const ReportOptions& options = {});

Json invalid_report_json(Json equation, const std::string& error);

Json witness_json(const std::optional<ResidueWitness>& w);
Json conditions_json(const NormalEquation& eq, const NormalConditions& c);
Json conditions_json(const GeneralEquation& eq, const LegendreConditions& c);

/// Re-checks a solvable report from its JSON alone: every step identity, every lift,
/// the base case, the bound and the final solution. Returns the problems found.
std::vector<std::string> check_report(const Json& report);

}  // namespace ternary
