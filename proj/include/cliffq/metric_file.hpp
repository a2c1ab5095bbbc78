#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cliffq/errors.hpp"
#include "cliffq/quadratic_form.hpp"
#include "cliffq/rational.hpp"

namespace cliffq {

class MetricFileError : public Error {
 public:
  using Error::Error;
};

// {"dim": 2, "matrix": [["1", "0"], ["0", "-1/2"]]}. Entries are rational
// strings; plain JSON integers are accepted too. Non-symmetric matrices are
// rejected with NotSymmetric.
QuadraticForm<Rational> parse_metric(std::string_view json_text);
QuadraticForm<Rational> load_metric(const std::filesystem::path& path);
std::string metric_to_json(const QuadraticForm<Rational>& q);

}  // namespace cliffq
