#include "coxkl/error.hpp"
#include "coxkl/theorems.hpp"

#include <doctest.h>

#include <string>

using namespace coxkl;

TEST_CASE("registry") {
  CHECK(registered_checks().size() == 23);
  CHECK(is_registered_check("deodhar"));
  CHECK_FALSE(is_registered_check("nope"));
  const auto g = GroupContext::build("A2");
  KLContext kl(g);
  CHECK_THROWS_AS(run_check("nope", kl), UsageError);
  const std::vector<std::string> bad{"r_basics", "nope"};
  CHECK_THROWS_AS(run_suite(kl, bad), UsageError);
}

TEST_CASE("full suite on A2") {
  const auto g = GroupContext::build("A2");
  KLContext kl(g);
  const std::vector<std::string> all{"all"};
  const auto reports = run_suite(kl, all);
  CHECK(reports.size() == 23);
  for (const auto& r : reports) {
    CAPTURE(r.check_name);
    CHECK(r.passed);
    CHECK(r.witnesses.empty());
    CHECK(r.stats.at("witnesses_total") == 0);
    CHECK(r.group == "A2");
  }
  CHECK(all_passed(reports));
  CHECK(summary_table(reports).find("smoothness_equivalence") != std::string::npos);
  CHECK(report_to_json(reports.front())["check"].is_string());
}

TEST_CASE("deodhar on A3") {
  const auto r = run_check("deodhar", GroupContext::build("A3"));
  CHECK(r.passed);
  CHECK(r.stats.at("max_defect") == 1);
}

TEST_CASE("singular A3 pairs satisfy the strict edge bound") {
  const auto g = GroupContext::build("A3");
  KLContext kl(g);
  const auto r = run_check("nth3_strict_edges", kl);
  CHECK(r.passed);
  CHECK(r.pairs_tested == 213);
  CHECK(r.stats.at("singular_pairs") == 6);
}

TEST_CASE("linear and quadratic coefficient sweeps") {
  const auto g = GroupContext::build("B2");
  KLContext kl(g);
  CHECK(check_dvc(kl).passed);
  CHECK(check_nth2(kl).passed);
}

TEST_CASE("brenti scan only reports") {
  const auto r = run_check("brenti_scan", GroupContext::build("G2"));
  CHECK(r.passed);
  CHECK(r.stats.count("excess_found") == 1);
}
