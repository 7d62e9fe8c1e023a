#include "riordan_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "riordan/connection.hpp"
#include "riordan/genlagrange.hpp"

namespace riordan::cli {

std::size_t default_order() {
  const char* env = std::getenv("RIORDAN_ORDER_DEFAULT");
  if (env == nullptr || *env == '\0') return kDefaultOrder;
  const std::string_view text(env);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError("RIORDAN_ORDER_DEFAULT must be a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

const std::vector<std::string>& matrix_kinds() {
  static const std::vector<std::string> kinds = {"U",  "Uinv",  "V",  "Vinv", "J",  "F",  "Finv", "S",
                                                 "Sinv", "C",   "Ut", "Utinv", "Ft", "Ftinv", "St", "Ct",
                                                 "Dt", "W",     "X",  "G",    "H",  "A",  "T"};
  return kinds;
}

FinMatrix build_matrix(const MatrixMeta& req) {
  const auto& kinds = matrix_kinds();
  if (std::find(kinds.begin(), kinds.end(), req.kind) == kinds.end()) {
    throw UsageError("unknown matrix kind '" + req.kind + "'");
  }
  const bool wants_beta = req.kind == "G" || req.kind == "H" || req.kind == "A" || req.kind == "T";
  const bool wants_m = req.kind == "W";
  if (wants_beta && !req.beta) throw UsageError("matrix " + req.kind + " requires --beta");
  if (!wants_beta && req.beta) throw UsageError("matrix " + req.kind + " does not take --beta");
  if (wants_m && !req.m) throw UsageError("matrix W requires --m");
  if (!wants_m && req.m) throw UsageError("matrix " + req.kind + " does not take --m");

  const std::size_t n = req.n;
  const std::string& k = req.kind;
  if (k == "U") return core_matrix(CoreKind::U, n);
  if (k == "Uinv") return core_matrix(CoreKind::Uinv, n);
  if (k == "V") return core_matrix(CoreKind::V, n);
  if (k == "Vinv") return core_matrix(CoreKind::Vinv, n);
  if (k == "J") return core_matrix(CoreKind::J, n);
  if (k == "F") return exp_matrix(ExpKind::F, n);
  if (k == "Finv") return exp_matrix(ExpKind::Finv, n);
  if (k == "S") return exp_matrix(ExpKind::S, n);
  if (k == "Sinv") return exp_matrix(ExpKind::Sinv, n);
  if (k == "C") return exp_matrix(ExpKind::C, n);
  if (k == "Ut") return tilde_matrix(TildeKind::Ut, n);
  if (k == "Utinv") return tilde_matrix(TildeKind::Utinv, n);
  if (k == "Ft") return tilde_matrix(TildeKind::Ft, n);
  if (k == "Ftinv") return tilde_matrix(TildeKind::Ftinv, n);
  if (k == "St") return tilde_matrix(TildeKind::St, n);
  if (k == "Ct") return tilde_matrix(TildeKind::Ct, n);
  if (k == "Dt") return tilde_matrix(TildeKind::Dt, n);
  if (k == "W") return amazing_matrix(n, *req.m);
  if (k == "X") return beta_matrix(BetaKind::X, n, 0);
  if (k == "G") return beta_matrix(BetaKind::G, n, *req.beta);
  if (k == "H") return beta_matrix(BetaKind::H, n, *req.beta);
  if (k == "A") return beta_matrix(BetaKind::A, n, *req.beta);
  return beta_matrix(BetaKind::T, n, *req.beta);
}

NumeratorResult compute_numerator(std::string_view family, const Series& b, const Series& a, std::size_t n) {
  if (family == "euler") return euler_numerator(b, a, n);
  if (family == "narayana") return narayana_numerator(b, a, n);
  const Series one = Series::constant(1, a.order());
  if (family == "alpha") return euler_numerator(one, a, n);
  if (family == "phi") return narayana_numerator(one, a, n);
  throw UsageError("unknown numerator family '" + std::string(family) + "'");
}

}  // namespace riordan::cli
