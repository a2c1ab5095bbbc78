#include "cliffq/metric_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cliffq/blade.hpp"

namespace cliffq {

namespace {

Rational entry_value(const nlohmann::json& e, std::size_t i, std::size_t j) {
  const std::string where = "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  if (e.is_string()) {
    try {
      return Rational::parse(e.get<std::string>());
    } catch (const std::exception& ex) {
      throw MetricFileError(where + ": " + ex.what());
    }
  }
  if (e.is_number_integer()) return Rational(e.get<long>());
  throw MetricFileError(where + " must be a rational string like \"-1/2\"");
}

}  // namespace

QuadraticForm<Rational> parse_metric(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MetricFileError(std::string("metric file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MetricFileError("metric file must contain an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    throw MetricFileError("metric file needs a non-negative integer field 'dim'");
  }
  const auto n = doc["dim"].get<std::size_t>();
  if (n > kMaxDimension) throw MetricFileError("metric dimension exceeds " + std::to_string(kMaxDimension));
  if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].size() != n) {
    throw MetricFileError("metric file needs 'matrix' with " + std::to_string(n) + " rows");
  }
  std::vector<Rational> m;
  m.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = doc["matrix"][i];
    if (!row.is_array() || row.size() != n) {
      throw MetricFileError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) +
                            " entries");
    }
    for (std::size_t j = 0; j < n; ++j) m.push_back(entry_value(row[j], i, j));
  }
  return QuadraticForm<Rational>(n, std::move(m));
}

QuadraticForm<Rational> load_metric(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MetricFileError("cannot open metric file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_metric(buf.str());
}

std::string metric_to_json(const QuadraticForm<Rational>& q) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < q.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < q.dim(); ++j) row.push_back(q.at(i, j).str());
    rows.push_back(row);
  }
  nlohmann::json doc;
  doc["dim"] = q.dim();
  doc["matrix"] = rows;
  return doc.dump();
}

}  // namespace cliffq
