#include "riordan_cli/app.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riordan/error.hpp"
#include "riordan_cli/commands.hpp"
#include "riordan_cli/expr.hpp"
#include "riordan_cli/render.hpp"
#include "riordan_cli/verify.hpp"

namespace riordan::cli {

namespace {

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const DomainError&) {
    throw UsageError(flag + " expects a rational p/q, got '" + text + "'");
  }
}

std::vector<Rational> parse_betas(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    out.push_back(parse_rational_flag("--betas", item));
  }
  if (out.empty()) throw UsageError("--betas needs at least one value");
  return out;
}

struct Options {
  std::string format = "text";
  std::optional<std::size_t> order;
  std::string expr;
  std::string kind;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::string> beta;
  std::string family;
  std::string b = "1";
  std::optional<std::string> a;
  std::string suite = "all";
  std::optional<std::size_t> max_n;
  std::optional<std::string> betas;
  std::optional<std::uint64_t> seed;
};

int run_series(const Options& o, std::ostream& out) {
  const std::size_t order = o.order ? *o.order : default_order();
  out << render_series(evaluate(o.expr, order), o.expr, parse_format(o.format));
  return kOk;
}

int run_matrix(const Options& o, std::ostream& out) {
  MatrixMeta meta;
  meta.kind = o.kind;
  meta.n = *o.n;
  if (o.beta) meta.beta = parse_rational_flag("--beta", *o.beta);
  meta.m = o.m;
  if (meta.kind == "W" && meta.m && *meta.m == 0) throw UsageError("--m must be positive");
  out << render_matrix(build_matrix(meta), meta, parse_format(o.format));
  return kOk;
}

int run_numerator(const Options& o, std::ostream& out) {
  const bool wants_b = o.family == "euler" || o.family == "narayana";
  if (!wants_b && o.b != "1") throw UsageError("numerator " + o.family + " does not take --b");
  const std::size_t n = *o.n;
  const std::size_t order = o.order ? *o.order : std::max(default_order(), n);
  const Series a = evaluate(*o.a, order);
  const Series b = evaluate(o.b, order);
  out << render_numerator(compute_numerator(o.family, b, a, n), o.family, n, parse_format(o.format));
  return kOk;
}

int run_verify_cmd(const Options& o, std::ostream& out) {
  VerifyOptions v = default_verify_options();
  if (o.max_n) v.max_n = *o.max_n;
  if (o.betas) v.betas = parse_betas(*o.betas);
  if (o.seed) v.seed = *o.seed;
  const Report report = run_verify(o.suite, v);
  out << render_report(report, parse_format(o.format));
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Riordan array computations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  auto* series = app.add_subcommand("series", "Coefficients of a series expression");
  series->add_option("expr", o.expr, "Series expression")->required();
  series->add_option("--order", o.order, "Truncation order");
  add_format(series);

  auto* matrix = app.add_subcommand("matrix", "An operator matrix");
  matrix->add_option("kind", o.kind, "Matrix kind")->required()->check(CLI::IsMember(matrix_kinds()));
  matrix->add_option("--n", o.n, "Order n")->required();
  matrix->add_option("--beta", o.beta, "Parameter beta as p/q (G, H, A, T)");
  matrix->add_option("--m", o.m, "Parameter m (W)");
  add_format(matrix);

  auto* numerator = app.add_subcommand("numerator", "Numerator polynomial of a Riordan array diagonal");
  numerator->add_option("family", o.family, "euler, narayana, alpha or phi")
      ->required()
      ->check(CLI::IsMember({"euler", "narayana", "alpha", "phi"}));
  numerator->add_option("--n", o.n, "Diagonal index")->required();
  numerator->add_option("--b", o.b, "Series b (euler, narayana)");
  numerator->add_option("--a", o.a, "Series a with a(0) = 1")->required();
  numerator->add_option("--order", o.order, "Truncation order");
  add_format(numerator);

  auto* verify = app.add_subcommand("verify", "Check identities exactly");
  verify->add_option("--suite", o.suite, "Suite name or all");
  verify->add_option("--max-n", o.max_n, "Largest n checked");
  verify->add_option("--betas", o.betas, "Comma-separated beta values");
  verify->add_option("--seed", o.seed, "Random seed");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*series) return run_series(o, out);
    if (*matrix) return run_matrix(o, out);
    if (*numerator) return run_numerator(o, out);
    return run_verify_cmd(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kInputError;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace riordan::cli
