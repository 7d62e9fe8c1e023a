#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/poly.hpp"
#include "riordan/series.hpp"
#include "riordan_cli/random.hpp"
#include "riordan_cli/verify.hpp"

namespace riordan::cli::verify {

std::string to_text(const Rational& r);
std::string to_text(const Poly& p);
std::string to_text(const Series& s);
std::string to_text(const FinMatrix& m);
std::string to_text(bool b);

/// Collects check results for one suite. The current (n, beta) context is
/// attached to every result until changed.
class Checker {
 public:
  Checker(const VerifyOptions& options, std::uint64_t seed) : options_(options), gen_(seed) {}

  const VerifyOptions& options() const { return options_; }
  std::size_t max_n() const { return options_.max_n; }
  /// The bound used where a random square-array input is involved.
  std::size_t max_n_random() const { return std::min<std::size_t>(options_.max_n, 6); }
  const std::vector<Rational>& betas() const { return options_.betas; }
  std::size_t instances() const { return options_.instances; }
  SeriesGen& gen() { return gen_; }

  void at(std::optional<std::size_t> n, std::optional<Rational> beta = std::nullopt) {
    n_ = n;
    beta_ = std::move(beta);
  }

  template <class T>
  void equal(const std::string& id, const T& actual, const T& expected) {
    const bool ok = actual == expected;
    record(id, ok, ok ? std::string() : to_text(expected), ok ? std::string() : to_text(actual));
  }

  void holds(const std::string& id, bool ok, const std::string& detail = {}) {
    record(id, ok, ok ? std::string() : "true", ok ? std::string() : detail.empty() ? "false" : detail);
  }

  /// Runs body; an escaping exception becomes a failed check under id.
  void guarded(const std::string& id, const std::function<void()>& body);

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void record(const std::string& id, bool ok, std::string expected, std::string actual);

  VerifyOptions options_;
  SeriesGen gen_;
  std::optional<std::size_t> n_;
  std::optional<Rational> beta_;
  std::vector<CheckResult> results_;
};

using SuiteFn = void (*)(Checker&);

struct Suite {
  const char* name;
  SuiteFn run;
};

std::vector<Suite> fixture_suites();
std::vector<Suite> euler_suites();
std::vector<Suite> narayana_suites();
std::vector<Suite> beta_suites();
std::vector<Suite> tilde_suites();
std::vector<Suite> lagrange_suites();
std::vector<Suite> example_suites();

}  // namespace riordan::cli::verify
