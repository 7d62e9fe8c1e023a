#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/numerator.hpp"
#include "riordan/series.hpp"
#include "riordan_cli/render.hpp"

namespace riordan::cli {

/// Bad command-line parameters; the process exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kDefaultOrder = 16;

/// RIORDAN_ORDER_DEFAULT when set to a non-negative integer, else 16.
std::size_t default_order();

const std::vector<std::string>& matrix_kinds();

/// beta is required for G, H, A, T and rejected elsewhere; m is required for W
/// and rejected elsewhere.
FinMatrix build_matrix(const MatrixMeta& request);

/// family is euler, narayana, alpha or phi. alpha and phi take b = 1.
NumeratorResult compute_numerator(std::string_view family, const Series& b, const Series& a, std::size_t n);

}  // namespace riordan::cli
