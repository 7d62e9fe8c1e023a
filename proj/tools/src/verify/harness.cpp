#include "harness.hpp"

#include <exception>
#include <sstream>

#include "riordan_cli/commands.hpp"

namespace riordan::cli {

namespace verify {

std::string to_text(const Rational& r) { return r.str(); }
std::string to_text(const Poly& p) { return p.str(); }
std::string to_text(const Series& s) { return "[" + s.str() + "]"; }
std::string to_text(bool b) { return b ? "true" : "false"; }

std::string to_text(const FinMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

void Checker::guarded(const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    record(id, false, "no exception", e.what());
  }
}

void Checker::record(const std::string& id, bool ok, std::string expected, std::string actual) {
  results_.push_back(CheckResult{id, ok, n_, beta_, std::move(expected), std::move(actual)});
}

namespace {

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> all;
    for (auto part : {fixture_suites, euler_suites, narayana_suites, beta_suites, tilde_suites, lagrange_suites,
                      example_suites}) {
      for (const Suite& s : part()) all.push_back(s);
    }
    return all;
  }();
  return suites;
}

// FNV-1a, so suite seeds do not depend on the standard library's hash.
std::uint64_t name_hash(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SuiteReport run_one(const Suite& suite, const VerifyOptions& options) {
  Checker checker(options, options.seed ^ name_hash(suite.name));
  checker.guarded(std::string(suite.name) + ": suite aborted", [&] { suite.run(checker); });
  std::vector<CheckResult> checks = checker.take();
  if (checks.empty()) checks.push_back(CheckResult{std::string(suite.name) + ": no checks ran", false, {}, {}, "", ""});
  return SuiteReport{suite.name, std::move(checks)};
}

}  // namespace

}  // namespace verify

std::vector<Rational> default_betas() {
  return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 3), Rational(1, 2), Rational(1), Rational(2),
          Rational(3)};
}

VerifyOptions default_verify_options() {
  VerifyOptions o;
  o.betas = default_betas();
  return o;
}

std::size_t SuiteReport::failures() const {
  std::size_t f = 0;
  for (const auto& c : checks) f += c.passed ? 0 : 1;
  return f;
}

std::size_t Report::failures() const {
  std::size_t f = 0;
  for (const auto& s : suites) f += s.failures();
  return f;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : verify::registry()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

Report run_verify(const std::string& suite, const VerifyOptions& options) {
  Report report;
  bool found = false;
  for (const auto& s : verify::registry()) {
    if (suite == "all" || suite == s.name) {
      report.suites.push_back(verify::run_one(s, options));
      found = true;
    }
  }
  if (!found) throw UsageError("unknown suite '" + suite + "'");
  return report;
}

std::string render_report(const Report& report, Format format) {
  std::size_t total = 0;
  for (const auto& s : report.suites) total += s.checks.size();

  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["passed"] = report.passed();
    doc["checks"] = total;
    doc["failures"] = report.failures();
    auto suites = nlohmann::ordered_json::array();
    for (const auto& s : report.suites) {
      nlohmann::ordered_json js;
      js["name"] = s.name;
      js["status"] = s.passed() ? "pass" : "fail";
      js["checks"] = s.checks.size();
      auto checks = nlohmann::ordered_json::array();
      for (const auto& c : s.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = c.passed ? "pass" : "fail";
        if (c.n) jc["n"] = *c.n;
        if (c.beta) jc["beta"] = c.beta->str();
        if (!c.passed) {
          jc["expected"] = c.expected;
          jc["actual"] = c.actual;
        }
        checks.push_back(std::move(jc));
      }
      js["results"] = std::move(checks);
      suites.push_back(std::move(js));
    }
    doc["suites"] = std::move(suites);
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == Format::Csv) {
    os << "suite,check,status,n,beta,expected,actual\r\n";
    auto quote = [](const std::string& s) {
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    };
    for (const auto& s : report.suites) {
      for (const auto& c : s.checks) {
        os << s.name << ',' << quote(c.id) << ',' << (c.passed ? "pass" : "fail") << ','
           << (c.n ? std::to_string(*c.n) : "") << ',' << (c.beta ? c.beta->str() : "") << ','
           << quote(c.expected) << ',' << quote(c.actual) << "\r\n";
      }
    }
    return os.str();
  }

  for (const auto& s : report.suites) {
    os << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks.size() << " checks";
    if (!s.passed()) os << ", " << s.failures() << " failed";
    os << ")\n";
    for (const auto& c : s.checks) {
      if (c.passed) continue;
      os << "  " << c.id;
      if (c.n) os << " n=" << *c.n;
      if (c.beta) os << " beta=" << c.beta->str();
      os << "\n    expected: " << c.expected << "\n    actual:   " << c.actual << '\n';
    }
  }
  os << report.suites.size() << " suites, " << total << " checks, " << report.failures() << " failed\n";
  return os.str();
}

}  // namespace riordan::cli
