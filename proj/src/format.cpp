#include "cliffq/format.hpp"

#include "cliffq/errors.hpp"

namespace cliffq {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

std::string blade_label(Blade b, const std::vector<std::string>& labels) {
  if (b.bits == 0) return "1";
  std::string out;
  for (unsigned i : b.indices()) {
    if (i >= labels.size()) throw Error("no label for basis vector " + std::to_string(i + 1));
    out += labels[i];
  }
  return out;
}

std::string format_human(const Multivector<Rational>& m, const std::vector<std::string>& labels) {
  if (m.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : m.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? -c : c;
    if (b.bits == 0) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += blade_label(b, labels);
    } else {
      out += mag.str() + " " + blade_label(b, labels);
    }
  }
  return out;
}

std::string format_json(const Multivector<Rational>& m, const std::vector<std::string>& labels) {
  // Labels and rationals never need escaping, so the layout is written
  // directly to keep the ": " / ", " spacing stable.
  std::string out = "{\"blades\": {";
  bool first = true;
  for (const auto& [b, c] : m.terms()) {
    if (!first) out += ", ";
    first = false;
    out += "\"" + blade_label(b, labels) + "\": \"" + c.str() + "\"";
  }
  out += "}}";
  return out;
}

}  // namespace cliffq
