#include <doctest.h>

#include <algorithm>
#include <string>

#include <json.hpp>

#include "riordan_cli/commands.hpp"
#include "riordan_cli/verify.hpp"

using namespace riordan::cli;

TEST_CASE("every identifier named by the report contract is a suite") {
  const auto& names = suite_names();
  for (const char* id : {"fixtures", "thm2.1", "thm2.5", "thm3.1", "thm3.2", "thm4.1", "thm4.5", "thm6.1", "thm6.3",
                         "thm7.1", "thm7.2", "thm8.1", "thm8.3", "thm9.1", "thm9.5", "ex2.1", "ex8.1", "eq1", "eq2",
                         "eq3", "w-amazing", "col-sums"}) {
    CHECK_MESSAGE(std::find(names.begin(), names.end(), id) != names.end(), id);
  }
}

TEST_CASE("unknown suite is a usage error") { CHECK_THROWS_AS(run_verify("thm1.0", default_verify_options()), UsageError); }

TEST_CASE("a suite reports the same checks alone and inside all") {
  auto options = default_verify_options();
  options.max_n = 4;
  options.instances = 3;
  const auto alone = run_verify("thm2.2", options);
  const auto all = run_verify("all", options);
  const auto it = std::find_if(all.suites.begin(), all.suites.end(), [](const auto& s) { return s.name == "thm2.2"; });
  REQUIRE(it != all.suites.end());
  REQUIRE(alone.suites.size() == 1);
  CHECK(alone.suites[0].checks.size() == it->checks.size());
  CHECK(render_report(alone, Format::Json).size() > 0);
  CHECK(all.passed());
}

TEST_CASE("a failed check carries its counterexample") {
  Report report;
  SuiteReport suite;
  suite.name = "demo";
  suite.checks.push_back({"a = b", false, 3, riordan::Rational(1, 2), "1", "2"});
  report.suites.push_back(suite);
  CHECK_FALSE(report.passed());
  const auto doc = nlohmann::json::parse(render_report(report, Format::Json));
  CHECK(doc["failures"] == 1);
  const auto& check = doc["suites"][0]["results"][0];
  CHECK(check["n"] == 3);
  CHECK(check["beta"] == "1/2");
  CHECK(check["expected"] == "1");
  CHECK(check["actual"] == "2");
}
