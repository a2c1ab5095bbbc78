#pragma once

#include <cstddef>
#include <memory>
#include <utility>

#include "cliffq/fast_product.hpp"
#include "cliffq/multivector.hpp"
#include "cliffq/oracle.hpp"
#include "cliffq/quadratic_form.hpp"

namespace cliffq {

// A Clifford algebra G(V, Q) with a chosen product engine. Cheap to copy;
// the product caches are shared and immutable or internally locked.
template <Ring S>
class Algebra {
 public:
  explicit Algebra(QuadraticForm<S> q, Engine engine = Engine::Auto)
      : form_(std::move(q)), engine_(engine) {
    const bool diagonal = form_.is_diagonal();
    if (engine_ == Engine::Fast && !diagonal) {
      throw NotDiagonal("the fast engine needs a diagonal metric");
    }
    if (engine_ == Engine::Fast || (engine_ == Engine::Auto && diagonal)) {
      if (form_.dim() <= 8) table_ = std::make_shared<const CayleyTable<S>>(form_);
      uses_fast_ = true;
    } else {
      oracle_ = std::make_shared<const OracleEngine<S>>(form_);
    }
  }

  const QuadraticForm<S>& form() const { return form_; }
  std::size_t dim() const { return form_.dim(); }
  Engine engine() const { return engine_; }
  bool uses_fast_engine() const { return uses_fast_; }

  Multivector<S> product(const Multivector<S>& a, const Multivector<S>& b) const {
    if (table_) return table_->product(a, b);
    if (uses_fast_) return diagonal_product(form_, a, b);
    return oracle_->product(a, b);
  }

  Multivector<S> left_contraction(const Multivector<S>& a, const Multivector<S>& b) const {
    return left_contraction_with(a, b, [this](const Multivector<S>& x, const Multivector<S>& y) {
      return product(x, y);
    });
  }

  Multivector<S> zero() const { return Multivector<S>(dim()); }
  Multivector<S> one() const { return Multivector<S>::one(dim()); }
  Multivector<S> scalar(const S& c) const { return Multivector<S>::scalar(dim(), c); }
  Multivector<S> basis_vector(std::size_t i) const {
    return Multivector<S>::blade(dim(), Blade::vector(i));
  }

 private:
  QuadraticForm<S> form_;
  Engine engine_;
  bool uses_fast_ = false;
  std::shared_ptr<const CayleyTable<S>> table_;
  std::shared_ptr<const OracleEngine<S>> oracle_;
};

// A multivector bound to its algebra, so that `*` is the geometric product.
// Lets the Clifford algebra itself serve as a lift target.
template <Ring S>
class AlgebraElement {
 public:
  AlgebraElement(std::shared_ptr<const Algebra<S>> alg, Multivector<S> value)
      : alg_(std::move(alg)), value_(std::move(value)) {}

  const Multivector<S>& value() const { return value_; }
  const Algebra<S>& algebra() const { return *alg_; }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return {a.alg_, a.value_ + b.value_};
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return {a.alg_, a.value_ - b.value_};
  }
  AlgebraElement operator-() const { return {alg_, -value_}; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return {a.alg_, a.alg_->product(a.value_, b.value_)};
  }
  friend AlgebraElement operator*(const S& s, const AlgebraElement& a) {
    return {a.alg_, s * a.value_};
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.value_ == b.value_;
  }

 private:
  std::shared_ptr<const Algebra<S>> alg_;
  Multivector<S> value_;
};

}  // namespace cliffq
