#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan_cli/render.hpp"

namespace riordan::cli {

struct VerifyOptions {
  std::size_t max_n = 8;
  std::vector<Rational> betas;
  std::uint64_t seed = 7;
  /// Random series per randomized property.
  std::size_t instances = 20;
};

/// {-2, -1, -1/2, 1/3, 1/2, 1, 2, 3}
std::vector<Rational> default_betas();
VerifyOptions default_verify_options();

struct CheckResult {
  std::string id;
  bool passed = false;
  std::optional<std::size_t> n;
  std::optional<Rational> beta;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

struct Report {
  std::vector<SuiteReport> suites;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Every suite name, in report order.
const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all". Throws UsageError for an
/// unknown name. Suites draw their random inputs from a generator seeded by
/// the options seed and the suite name, so a suite behaves the same alone and
/// inside "all".
Report run_verify(const std::string& suite, const VerifyOptions& options);

std::string render_report(const Report& report, Format format);

}  // namespace riordan::cli
