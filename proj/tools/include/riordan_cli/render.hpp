#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "riordan/matrix.hpp"
#include "riordan/numerator.hpp"
#include "riordan/series.hpp"

namespace riordan::cli {

enum class Format { Text, Csv, Json };

/// "text", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

struct MatrixMeta {
  std::string kind;
  std::size_t n = 0;
  std::optional<Rational> beta;
  std::optional<std::size_t> m;
};

nlohmann::ordered_json matrix_to_json(const FinMatrix& mat, const MatrixMeta& meta);
/// Reads the "rows" member back; throws std::invalid_argument on a ragged or malformed grid.
FinMatrix matrix_from_json(const nlohmann::json& doc);

std::string render_matrix(const FinMatrix& mat, const MatrixMeta& meta, Format format);
std::string render_series(const Series& s, std::string_view source, Format format);
std::string render_numerator(const NumeratorResult& r, std::string_view family, std::size_t n, Format format);

}  // namespace riordan::cli
