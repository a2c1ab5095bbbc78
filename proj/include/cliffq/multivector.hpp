#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cliffq/blade.hpp"
#include "cliffq/errors.hpp"
#include "cliffq/quadratic_form.hpp"
#include "cliffq/scalar.hpp"

namespace cliffq {

// Sparse element of a Clifford algebra over an n-dimensional space: a map
// from basis blade to nonzero coefficient, iterated in canonical blade order.
template <Ring S>
class Multivector {
 public:
  using Terms = std::map<Blade, S>;

  Multivector() = default;

  explicit Multivector(std::size_t n) : dim_(n) { check_dim(n); }

  static Multivector blade(std::size_t n, Blade b, S coeff = ScalarTraits<S>::one()) {
    Multivector m(n);
    m.add_term(b, std::move(coeff));
    return m;
  }

  // The image of c under the scalar embedding R -> G(V).
  static Multivector scalar(std::size_t n, S c) { return blade(n, Blade::scalar(), std::move(c)); }

  static Multivector one(std::size_t n) { return scalar(n, ScalarTraits<S>::one()); }

  // Embedding of a vector as a grade-1 multivector.
  static Multivector vector(const FieldVector<S>& v) {
    Multivector m(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) m.add_term(Blade::vector(i), v[i]);
    return m;
  }

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? ScalarTraits<S>::zero() : it->second;
  }

  S scalar_part() const { return coefficient(Blade::scalar()); }

  // Adds c·b in place, keeping the map free of zero coefficients.
  void add_term(Blade b, const S& c) {
    if (!b.fits(dim_)) {
      throw Error("blade outside dimension " + std::to_string(dim_));
    }
    if (cliffq::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second = it->second + c;
      if (cliffq::is_zero(it->second)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

  Multivector operator-() const {
    Multivector r(*this);
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }

  friend Multivector operator*(const S& s, const Multivector& a) {
    Multivector r(a.dim_);
    if (cliffq::is_zero(s)) return r;
    for (const auto& [b, c] : a.terms_) r.add_term(b, s * c);
    return r;
  }

  // Applies a per-blade sign (true = negate); the shared core of the
  // involutions.
  template <class Pred>
  Multivector negate_where(Pred negate) const {
    Multivector r(*this);
    for (auto& [b, c] : r.terms_) {
      if (negate(b)) c = -c;
    }
    return r;
  }

  Multivector grade(unsigned k) const {
    Multivector r(dim_);
    for (const auto& [b, c] : terms_) {
      if (b.grade() == k) r.terms_.emplace(b, c);
    }
    return r;
  }

  std::optional<unsigned> max_grade() const {
    if (terms_.empty()) return std::nullopt;
    // Canonical order sorts by grade first.
    return terms_.rbegin()->first.grade();
  }

  // Debug validator for the canonical-form invariant.
  bool is_canonical() const {
    for (const auto& [b, c] : terms_) {
      if (cliffq::is_zero(c) || !b.fits(dim_)) return false;
    }
    return true;
  }

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  static void check_dim(std::size_t n) {
    if (n > kMaxDimension) {
      throw Error("dimension " + std::to_string(n) + " exceeds the supported maximum of " +
                  std::to_string(kMaxDimension));
    }
  }
  void check_same(const Multivector& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch(dim_, o.dim_);
  }

  std::size_t dim_ = 0;
  Terms terms_;
};

template <Ring S>
Multivector<S> mv_add(const Multivector<S>& a, const Multivector<S>& b) {
  return a + b;
}

template <Ring S>
Multivector<S> mv_scale(const S& c, const Multivector<S>& a) {
  return c * a;
}

template <Ring S>
Multivector<S> algebra_map(const S& c, std::size_t n) {
  return Multivector<S>::scalar(n, c);
}

template <Ring S>
Multivector<S> iota(const FieldVector<S>& v) {
  return Multivector<S>::vector(v);
}

template <Ring S>
Multivector<S> grade_project(const Multivector<S>& a, unsigned k) {
  return a.grade(k);
}

template <Ring S>
std::optional<unsigned> max_grade(const Multivector<S>& a) {
  return a.max_grade();
}

}  // namespace cliffq
