#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffq/multivector.hpp"
#include "cliffq/oracle.hpp"
#include "cliffq/quadratic_form.hpp"

namespace cliffq {

// Product of two basis blades under a diagonal metric:
//   A·B = (-1)^t · Π_{i∈A∩B} Q(e_i) · (A Δ B)
// where t counts pairs (a∈A, b∈B) with a > b.
template <Ring S>
std::pair<S, Blade> blade_product_diagonal(const QuadraticForm<S>& q, Blade a, Blade b) {
  if (!q.is_diagonal()) {
    throw NotDiagonal("the blade engine needs a diagonal metric; use the rewriting product");
  }
  if (!a.fits(q.dim()) || !b.fits(q.dim())) throw Error("blade outside the metric's dimension");
  S coeff = ScalarTraits<S>::one();
  for (unsigned i : Blade(a.bits & b.bits).indices()) coeff = coeff * q.basis_square(i);
  if (reorder_swaps(a, b) % 2 == 1) coeff = -coeff;
  return {coeff, Blade(a.bits ^ b.bits)};
}

namespace detail {

template <Ring S, class BladeMul>
Multivector<S> bilinear(std::size_t n, const Multivector<S>& a, const Multivector<S>& b,
                        BladeMul&& mul) {
  if (a.dim() != n) throw DimensionMismatch(n, a.dim());
  if (b.dim() != n) throw DimensionMismatch(n, b.dim());
  Multivector<S> out(n);
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      auto [c, blade] = mul(ba, bb);
      if (!is_zero(c)) out.add_term(blade, ca * cb * c);
    }
  }
  return out;
}

}  // namespace detail

// Precomputed 2^n × 2^n blade table for a diagonal metric. Immutable once
// built.
template <Ring S>
class CayleyTable {
 public:
  explicit CayleyTable(const QuadraticForm<S>& q) : dim_(q.dim()) {
    if (dim_ > 12) throw Error("Cayley table limited to 12 dimensions");
    const std::size_t count = std::size_t{1} << dim_;
    entries_.reserve(count * count);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        entries_.push_back(blade_product_diagonal(q, Blade(a), Blade(b)));
      }
    }
  }

  std::size_t dim() const { return dim_; }

  const std::pair<S, Blade>& operator()(Blade a, Blade b) const {
    return entries_[(a.bits << dim_) | b.bits];
  }

  Multivector<S> product(const Multivector<S>& a, const Multivector<S>& b) const {
    return detail::bilinear<S>(dim_, a, b, [this](Blade x, Blade y) { return (*this)(x, y); });
  }

 private:
  std::size_t dim_;
  std::vector<std::pair<S, Blade>> entries_;
};

enum class Engine { Auto, Oracle, Fast };

inline std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Oracle: return "oracle";
    case Engine::Fast: return "fast";
  }
  return "?";
}

// Bit-set product for diagonal forms, throwing NotDiagonal otherwise.
template <Ring S>
Multivector<S> diagonal_product(const QuadraticForm<S>& q, const Multivector<S>& a,
                                const Multivector<S>& b) {
  if (!q.is_diagonal()) {
    throw NotDiagonal("the fast engine needs a diagonal metric");
  }
  return detail::bilinear<S>(q.dim(), a, b, [&q](Blade x, Blade y) {
    return blade_product_diagonal(q, x, y);
  });
}

// Auto picks the blade engine for diagonal metrics and the rewriting oracle
// otherwise.
template <Ring S>
Multivector<S> geometric_product(const QuadraticForm<S>& q, const Multivector<S>& a,
                                 const Multivector<S>& b, Engine engine = Engine::Auto) {
  switch (engine) {
    case Engine::Fast: return diagonal_product(q, a, b);
    case Engine::Oracle: return product_general(q, a, b);
    case Engine::Auto: break;
  }
  return q.is_diagonal() ? diagonal_product(q, a, b) : product_general(q, a, b);
}

// Exterior product; metric-free, equal to the geometric product of the zero
// form.
template <Ring S>
Multivector<S> wedge_product(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  return detail::bilinear<S>(a.dim(), a, b, [](Blade x, Blade y) {
    if ((x.bits & y.bits) != 0) return std::pair<S, Blade>{ScalarTraits<S>::zero(), Blade()};
    S sign = reorder_swaps(x, y) % 2 == 1 ? -ScalarTraits<S>::one() : ScalarTraits<S>::one();
    return std::pair<S, Blade>{sign, Blade(x.bits | y.bits)};
  });
}

// a ⌋ b = Σ_{i<=j} <<a>_i <b>_j>_{j-i}, with products from `mul`.
template <Ring S, class Mul>
Multivector<S> left_contraction_with(const Multivector<S>& a, const Multivector<S>& b, Mul&& mul) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  const std::size_t n = a.dim();
  Multivector<S> out(n);
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if (ba.grade() > bb.grade()) continue;
      const Multivector<S> p = mul(Multivector<S>::blade(n, ba, ca), Multivector<S>::blade(n, bb, cb));
      out += p.grade(bb.grade() - ba.grade());
    }
  }
  return out;
}

template <Ring S>
Multivector<S> left_contraction(const QuadraticForm<S>& q, const Multivector<S>& a,
                                const Multivector<S>& b, Engine engine = Engine::Auto) {
  return left_contraction_with(a, b, [&](const Multivector<S>& x, const Multivector<S>& y) {
    return geometric_product(q, x, y, engine);
  });
}

}  // namespace cliffq
