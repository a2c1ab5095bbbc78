#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cliffq/algebra.hpp"
#include "cliffq/multivector.hpp"
#include "cliffq/quadratic_form.hpp"

namespace cliffq {

// Grade involution: (-1)^k on grade-k blades. Equals lift(-ι).
template <Ring S>
Multivector<S> involute(const Multivector<S>& a) {
  return a.negate_where([](Blade b) { return b.grade() % 2 == 1; });
}

// Reversion: (-1)^(k(k-1)/2) on grade-k blades, the sign of reversing a word
// of k distinct anticommuting letters.
template <Ring S>
Multivector<S> reverse(const Multivector<S>& a) {
  return a.negate_where([](Blade b) { return (b.grade() / 2) % 2 == 1; });
}

// reverse ∘ involute: (-1)^(k(k+1)/2) on grade-k blades.
template <Ring S>
Multivector<S> clifford_conjugate(const Multivector<S>& a) {
  return a.negate_where([](Blade b) { return ((b.grade() + 1) / 2) % 2 == 1; });
}

template <Ring S>
struct Z2Parts {
  Multivector<S> even;
  Multivector<S> odd;
};

template <Ring S>
Z2Parts<S> grades_z2(const Multivector<S>& a) {
  Z2Parts<S> parts{Multivector<S>(a.dim()), Multivector<S>(a.dim())};
  for (const auto& [b, c] : a.terms()) {
    (b.grade() % 2 == 0 ? parts.even : parts.odd).add_term(b, c);
  }
  return parts;
}

// An associative unital S-algebra usable as the codomain of lift.
template <class T, class S>
concept TargetAlgebra = Ring<S> && std::copyable<T> && requires(const T a, const T b, const S s) {
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { s * a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

// The algebra morphism G(V, Q) -> T extending the images f(e_i) of the basis
// vectors. Construction verifies, on the basis,
//   f(e_i)² = Q(e_i)·1                            for every i
//   f(e_i) f(e_j) + f(e_j) f(e_i) = polar(e_i, e_j)·1   for i < j
// which is equivalent to f(v)² = Q(v)·1 for all v.
template <Ring S, TargetAlgebra<S> T>
class Lift {
 public:
  Lift(QuadraticForm<S> q, std::vector<T> images, T unit)
      : form_(std::move(q)), images_(std::move(images)), unit_(std::move(unit)) {
    const std::size_t n = form_.dim();
    if (images_.size() != n) {
      throw LiftError("lift needs " + std::to_string(n) + " basis images, got " +
                      std::to_string(images_.size()));
    }
    auto name = [](std::size_t i) { return "e" + std::to_string(i + 1); };
    for (std::size_t i = 0; i < n; ++i) {
      const S expected = form_.basis_square(i);
      if (!(images_[i] * images_[i] == expected * unit_)) {
        throw LiftError("lift relation violated: f(" + name(i) + ")*f(" + name(i) + ") != Q(" +
                        name(i) + ") = " + to_string(expected));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const S expected = form_.basis_polar(i, j);
        if (!(images_[i] * images_[j] + images_[j] * images_[i] == expected * unit_)) {
          throw LiftError("lift relation violated: f(" + name(i) + ")*f(" + name(j) + ") + f(" +
                          name(j) + ")*f(" + name(i) + ") != polar(" + name(i) + "," + name(j) +
                          ") = " + to_string(expected));
        }
      }
    }
  }

  const QuadraticForm<S>& form() const { return form_; }

  // Blade e_{i1}...e_{ik} maps to f(e_{i1})...f(e_{ik}), extended linearly.
  T operator()(const Multivector<S>& x) const {
    if (x.dim() != form_.dim()) throw DimensionMismatch(form_.dim(), x.dim());
    T acc = ScalarTraits<S>::zero() * unit_;
    for (const auto& [b, c] : x.terms()) {
      T term = unit_;
      for (unsigned i : b.indices()) term = term * images_[i];
      acc = acc + c * term;
    }
    return acc;
  }

  // f(v) = Σ v_i f(e_i); lift ∘ ι agrees with this.
  T on_vector(const FieldVector<S>& v) const {
    if (v.dim() != form_.dim()) throw DimensionMismatch(form_.dim(), v.dim());
    T acc = ScalarTraits<S>::zero() * unit_;
    for (std::size_t i = 0; i < v.dim(); ++i) acc = acc + v[i] * images_[i];
    return acc;
  }

 private:
  QuadraticForm<S> form_;
  std::vector<T> images_;
  T unit_;
};

template <Ring S, TargetAlgebra<S> T>
Lift<S, T> lift(const QuadraticForm<S>& q, std::vector<T> images, T unit) {
  return Lift<S, T>(q, std::move(images), std::move(unit));
}

// Alternatization of the n-fold product of vectors:
//   (1/n!) Σ_σ sign(σ) ι(x_σ(1)) ... ι(x_σ(n)).
// Needs division by n!, hence a field.
template <Field S>
Multivector<S> iota_wedge(const Algebra<S>& alg, const std::vector<FieldVector<S>>& xs) {
  const std::size_t n = xs.size();
  std::vector<Multivector<S>> vecs;
  vecs.reserve(n);
  for (const auto& x : xs) {
    if (x.dim() != alg.dim()) throw DimensionMismatch(alg.dim(), x.dim());
    vecs.push_back(Multivector<S>::vector(x));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Multivector<S> sum = alg.zero();
  S factorial = ScalarTraits<S>::one();
  S k = ScalarTraits<S>::one();
  for (std::size_t i = 1; i <= n; ++i) {
    factorial = factorial * k;
    k = k + ScalarTraits<S>::one();
  }
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Multivector<S> term = alg.one();
    for (std::size_t i : perm) term = alg.product(term, vecs[i]);
    sum += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (ScalarTraits<S>::one() / factorial) * sum;
}

template <Field S>
Multivector<S> iota_wedge(const QuadraticForm<S>& q, const std::vector<FieldVector<S>>& xs) {
  return iota_wedge(Algebra<S>(q), xs);
}

}  // namespace cliffq
