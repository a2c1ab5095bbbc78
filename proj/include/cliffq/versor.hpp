#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cliffq/algebra.hpp"
#include "cliffq/structure.hpp"

namespace cliffq {

// s·ι(v_1)·…·ι(v_k), kept as its generators together with the product.
template <Ring S>
class Versor {
 public:
  static Versor scalar(const Algebra<S>& alg, S s) {
    return Versor(std::move(s), {}, Multivector<S>::scalar(alg.dim(), ScalarTraits<S>::one()),
                  alg.dim());
  }

  static Versor identity(const Algebra<S>& alg) { return scalar(alg, ScalarTraits<S>::one()); }

  static Versor of(const Algebra<S>& alg, std::vector<FieldVector<S>> generators,
                   S s = ScalarTraits<S>::one()) {
    Multivector<S> prod = alg.one();
    for (const auto& v : generators) {
      if (v.dim() != alg.dim()) throw DimensionMismatch(alg.dim(), v.dim());
      prod = alg.product(prod, Multivector<S>::vector(v));
    }
    return Versor(std::move(s), std::move(generators), std::move(prod), alg.dim());
  }

  const S& scale() const { return scale_; }
  const std::vector<FieldVector<S>>& generators() const { return generators_; }
  std::size_t dim() const { return dim_; }

  // scale · Π ι(v_i).
  Multivector<S> value() const { return scale_ * unscaled_; }

  // Π ι(v_i) without the scalar factor.
  const Multivector<S>& unscaled() const { return unscaled_; }

  template <Ring T>
  friend Versor<T> versor_mul(const Algebra<T>&, const Versor<T>&, const Versor<T>&);
  template <Ring T>
  friend Versor<T> versor_involute(const Versor<T>&);
  template <Ring T>
  friend Versor<T> versor_reverse(const Versor<T>&);
  template <Field T>
  friend Versor<T> versor_inverse(const Algebra<T>&, const Versor<T>&);

 private:
  Versor(S s, std::vector<FieldVector<S>> generators, Multivector<S> unscaled, std::size_t n)
      : scale_(std::move(s)),
        generators_(std::move(generators)),
        unscaled_(std::move(unscaled)),
        dim_(n) {}

  S scale_;
  std::vector<FieldVector<S>> generators_;
  Multivector<S> unscaled_;
  std::size_t dim_;
};

template <Ring S>
Versor<S> versor_mul(const Algebra<S>& alg, const Versor<S>& u, const Versor<S>& w) {
  if (u.dim_ != w.dim_) throw DimensionMismatch(u.dim_, w.dim_);
  std::vector<FieldVector<S>> gens = u.generators_;
  gens.insert(gens.end(), w.generators_.begin(), w.generators_.end());
  return Versor<S>(u.scale_ * w.scale_, std::move(gens), alg.product(u.unscaled_, w.unscaled_),
                   u.dim_);
}

template <Ring S>
Versor<S> versor_involute(const Versor<S>& u) {
  std::vector<FieldVector<S>> gens;
  gens.reserve(u.generators_.size());
  for (const auto& v : u.generators_) gens.push_back(-v);
  return Versor<S>(u.scale_, std::move(gens), involute(u.unscaled_), u.dim_);
}

template <Ring S>
Versor<S> versor_reverse(const Versor<S>& u) {
  std::vector<FieldVector<S>> gens(u.generators_.rbegin(), u.generators_.rend());
  return Versor<S>(u.scale_, std::move(gens), reverse(u.unscaled_), u.dim_);
}

// The scalar r with u·reverse(u) = r. Computed as scale² · Π Q(v_i) and
// checked against the actual product; a mismatch is an engine bug.
template <Ring S>
S versor_norm(const Algebra<S>& alg, const Versor<S>& u) {
  S r = u.scale() * u.scale();
  for (const auto& v : u.generators()) r = r * alg.form()(v);
  const Multivector<S> value = u.value();
  const Multivector<S> prod = alg.product(value, reverse(value));
  if (!(prod == Multivector<S>::scalar(alg.dim(), r))) {
    throw InvariantViolation("versor times its reverse is not the scalar " + to_string(r));
  }
  return r;
}

// Two-sided inverse: the reversed generator list scaled by
// 1/(scale · Π Q(v_i)). Throws NotInvertible when the norm is zero.
template <Field S>
Versor<S> versor_inverse(const Algebra<S>& alg, const Versor<S>& u) {
  const S norm = versor_norm(alg, u);
  if (is_zero(norm)) throw NotInvertible("versor has zero norm and is not invertible");
  S denom = u.scale_;
  for (const auto& v : u.generators_) denom = denom * alg.form()(v);
  std::vector<FieldVector<S>> gens(u.generators_.rbegin(), u.generators_.rend());
  return Versor<S>(ScalarTraits<S>::one() / denom, std::move(gens), reverse(u.unscaled_), u.dim_);
}

// u · x · u⁻¹.
template <Field S>
Multivector<S> versor_sandwich(const Algebra<S>& alg, const Versor<S>& u, const Multivector<S>& x) {
  const Versor<S> inv = versor_inverse(alg, u);
  return alg.product(alg.product(u.value(), x), inv.value());
}

}  // namespace cliffq
