#include "riordan_cli/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace riordan::cli {

namespace {

constexpr const char* kCrlf = "\r\n";

nlohmann::ordered_json rational_list(const std::vector<Rational>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

std::string dump(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

nlohmann::ordered_json matrix_to_json(const FinMatrix& mat, const MatrixMeta& meta) {
  nlohmann::ordered_json doc;
  doc["kind"] = meta.kind;
  doc["n"] = meta.n;
  if (meta.beta) doc["beta"] = meta.beta->str();
  if (meta.m) doc["m"] = *meta.m;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c).str());
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

FinMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw std::invalid_argument("matrix JSON has no rows array");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw std::invalid_argument("matrix row is not an array");
    rows.emplace_back();
    for (const auto& cell : row) {
      if (!cell.is_string()) throw std::invalid_argument("matrix entry is not a string");
      rows.back().push_back(Rational::parse(cell.get<std::string>()));
    }
    if (rows.back().size() != rows.front().size()) throw std::invalid_argument("ragged matrix rows");
  }
  return FinMatrix(rows);
}

std::string render_matrix(const FinMatrix& mat, const MatrixMeta& meta, Format format) {
  if (format == Format::Json) return dump(matrix_to_json(mat, meta));
  std::ostringstream os;
  if (format == Format::Csv) {
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      for (std::size_t c = 0; c < mat.cols(); ++c) os << (c ? "," : "") << mat(r, c).str();
      os << kCrlf;
    }
    return os.str();
  }
  std::vector<std::size_t> width(mat.cols(), 0);
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.cols(); ++c) width[c] = std::max(width[c], mat(r, c).str().size());
  }
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      const std::string cell = mat(r, c).str();
      os << (c ? "  " : "") << std::string(width[c] - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_series(const Series& s, std::string_view source, Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["expr"] = std::string(source);
    doc["order"] = s.order();
    doc["coefficients"] = rational_list(s.coeffs());
    return dump(doc);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "k,coefficient" << kCrlf;
    for (std::size_t k = 0; k <= s.order(); ++k) os << k << ',' << s[k].str() << kCrlf;
    return os.str();
  }
  os << s.str() << '\n';
  return os.str();
}

std::string render_numerator(const NumeratorResult& r, std::string_view family, std::size_t n, Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["family"] = std::string(family);
    doc["n"] = n;
    doc["coefficients"] = rational_list(r.poly.coeffs());
    doc["residual_checked"] = r.residual_checked;
    return dump(doc);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "k,coefficient" << kCrlf;
    for (std::size_t k = 0; k <= r.poly.bound(); ++k) os << k << ',' << r.poly[k].str() << kCrlf;
    return os.str();
  }
  os << r.poly.str() << '\n';
  os << "residual window: " << r.residual_checked << " coefficients verified zero\n";
  return os.str();
}

}  // namespace riordan::cli
