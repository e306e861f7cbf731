#pragma once

// Named, exhaustive verification checks.  Each check evaluates one
// property of the R-, R~- and KL polynomials (or of the Bruhat graph) over
// every applicable pair of a group and reports counterexamples.

#include "coxkl/klr.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxkl {

inline constexpr std::size_t kWitnessCap = 20;

struct CheckReport {
  std::string check_name;
  std::string group;
  std::uint64_t pairs_tested = 0;
  bool passed = true;
  std::vector<std::string> witnesses;  // at most kWitnessCap
  // Always contains "witnesses_total"; checks that can pass vacuously on
  // part of their domain record it under "not_applicable".
  std::map<std::string, std::int64_t> stats;
  // Report-only findings; never affect `passed`.
  std::vector<std::string> notes;
};

// Registered names, in suite order (cheap R-level checks first).
std::span<const std::string_view> registered_checks();
bool is_registered_check(std::string_view name);

// Throws UsageError on an unknown name.
CheckReport run_check(std::string_view name, KLContext& kl);
CheckReport run_check(std::string_view name, const GroupContext& ctx);

// Linear (q-1) coefficient of the R-sum against l(x, w), with the
// singularity biconditional cross-checked against KL polynomials.
CheckReport check_dvc(KLContext& kl);
// Same for the quadratic (q-1) coefficient against binom(l(x, w), 2).
CheckReport check_nth2(KLContext& kl);

// `selection` holds check names, or the single entry "all".
std::vector<CheckReport> run_suite(KLContext& kl, std::span<const std::string> selection);

bool all_passed(std::span<const CheckReport> reports);

// {"check":..., "group":..., "pairs":N, "passed":bool, "witnesses":[...],
//  "stats":{...}} plus "notes" when there are any.
nlohmann::json report_to_json(const CheckReport& r);
std::string summary_table(std::span<const CheckReport> reports);

}  // namespace coxkl
