#pragma once

#include <concepts>
#include <sstream>
#include <string>

#include "cliffq/rational.hpp"

namespace cliffq {

// Identity elements and capabilities of a coefficient type. Specialize for
// scalar types that cannot be built from int literals.
template <class S>
struct ScalarTraits {
  static S zero() { return S(0); }
  static S one() { return S(1); }
  static constexpr bool is_field = false;
};

template <>
struct ScalarTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static constexpr bool is_field = true;
};

// Commutative ring with decidable equality. Commutativity and the ring axioms
// are semantic requirements checked by the property suites, not the compiler.
template <class S>
concept Ring = std::regular<S> && requires(const S a, const S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { ScalarTraits<S>::zero() } -> std::convertible_to<S>;
  { ScalarTraits<S>::one() } -> std::convertible_to<S>;
};

template <class S>
concept Field = Ring<S> && ScalarTraits<S>::is_field && requires(const S a, const S b) {
  { a / b } -> std::convertible_to<S>;
};

template <Ring S>
bool is_zero(const S& s) {
  return s == ScalarTraits<S>::zero();
}

template <class S>
std::string to_string(const S& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace cliffq
