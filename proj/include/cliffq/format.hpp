#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliffq/blade.hpp"
#include "cliffq/multivector.hpp"
#include "cliffq/rational.hpp"

namespace cliffq {

// "e1", "e2", ... "en".
std::vector<std::string> default_labels(std::size_t n);

// "1" for the scalar blade, otherwise the factor labels concatenated
// ({1,3} -> "e1e3").
std::string blade_label(Blade b, const std::vector<std::string>& labels);

// "1 - 3/2 e1e2"; "0" for the zero multivector.
std::string format_human(const Multivector<Rational>& m, const std::vector<std::string>& labels);

// {"blades": {"1": "1", "e1e2": "-3/2"}}
std::string format_json(const Multivector<Rational>& m, const std::vector<std::string>& labels);

}  // namespace cliffq
