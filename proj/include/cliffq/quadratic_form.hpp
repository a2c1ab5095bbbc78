#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cliffq/errors.hpp"
#include "cliffq/scalar.hpp"

namespace cliffq {

template <Ring S>
class FieldVector {
 public:
  FieldVector() = default;
  explicit FieldVector(std::size_t n) : coords_(n, ScalarTraits<S>::zero()) {}
  explicit FieldVector(std::vector<S> coords) : coords_(std::move(coords)) {}
  FieldVector(std::initializer_list<S> coords) : coords_(coords) {}

  // Basis vector e_{i+1} (0-based index i).
  static FieldVector basis(std::size_t n, std::size_t i) {
    FieldVector v(n);
    v.coords_.at(i) = ScalarTraits<S>::one();
    return v;
  }

  std::size_t dim() const { return coords_.size(); }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  S& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<S>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (!cliffq::is_zero(c)) return false;
    }
    return true;
  }

  friend FieldVector operator+(const FieldVector& a, const FieldVector& b) {
    check_dims(a, b);
    FieldVector r(a);
    for (std::size_t i = 0; i < a.dim(); ++i) r.coords_[i] = r.coords_[i] + b.coords_[i];
    return r;
  }
  friend FieldVector operator-(const FieldVector& a, const FieldVector& b) {
    check_dims(a, b);
    FieldVector r(a);
    for (std::size_t i = 0; i < a.dim(); ++i) r.coords_[i] = r.coords_[i] - b.coords_[i];
    return r;
  }
  FieldVector operator-() const {
    FieldVector r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend FieldVector operator*(const S& c, const FieldVector& a) {
    FieldVector r(a);
    for (auto& x : r.coords_) x = c * x;
    return r;
  }
  friend bool operator==(const FieldVector&, const FieldVector&) = default;

 private:
  static void check_dims(const FieldVector& a, const FieldVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  }

  std::vector<S> coords_;
};

struct Signature {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t r = 0;

  std::size_t dim() const { return p + q + r; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Symmetric bilinear form B on S^n; Q(v) = vᵀBv and polar(u,v) = 2·uᵀBv.
template <Ring S>
class QuadraticForm {
 public:
  QuadraticForm() = default;

  // Row-major n×n matrix. Throws NotSymmetric unless B = Bᵀ exactly.
  QuadraticForm(std::size_t n, std::vector<S> matrix) : dim_(n), matrix_(std::move(matrix)) {
    if (matrix_.size() != n * n) {
      throw Error("metric matrix has " + std::to_string(matrix_.size()) +
                  " entries, expected " + std::to_string(n * n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(at(i, j) == at(j, i))) {
          throw NotSymmetric("metric matrix is not symmetric at (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + ")");
        }
      }
    }
  }

  static QuadraticForm diagonal(const std::vector<S>& entries) {
    const std::size_t n = entries.size();
    std::vector<S> m(n * n, ScalarTraits<S>::zero());
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = entries[i];
    return QuadraticForm(n, std::move(m));
  }

  static QuadraticForm from_signature(const Signature& s) {
    std::vector<S> d;
    d.reserve(s.dim());
    for (std::size_t i = 0; i < s.p; ++i) d.push_back(ScalarTraits<S>::one());
    for (std::size_t i = 0; i < s.q; ++i) d.push_back(-ScalarTraits<S>::one());
    for (std::size_t i = 0; i < s.r; ++i) d.push_back(ScalarTraits<S>::zero());
    return diagonal(d);
  }

  std::size_t dim() const { return dim_; }
  const S& at(std::size_t i, std::size_t j) const { return matrix_[i * dim_ + j]; }
  const std::vector<S>& matrix() const { return matrix_; }

  // Q(e_{i+1}).
  const S& basis_square(std::size_t i) const { return at(i, i); }

  // polar(e_{i+1}, e_{j+1}) = 2·B(i,j).
  S basis_polar(std::size_t i, std::size_t j) const { return at(i, j) + at(i, j); }

  S operator()(const FieldVector<S>& v) const {
    check(v);
    S acc = ScalarTraits<S>::zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (cliffq::is_zero(v[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (cliffq::is_zero(at(i, j))) continue;
        acc = acc + v[i] * at(i, j) * v[j];
      }
    }
    return acc;
  }

  S polar(const FieldVector<S>& u, const FieldVector<S>& v) const {
    check(u);
    check(v);
    return (*this)(u + v) - (*this)(u) - (*this)(v);
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i != j && !cliffq::is_zero(at(i, j))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  void check(const FieldVector<S>& v) const {
    if (v.dim() != dim_) throw DimensionMismatch(dim_, v.dim());
  }

  std::size_t dim_ = 0;
  std::vector<S> matrix_;
};

template <Ring S>
S quadratic_eval(const QuadraticForm<S>& q, const FieldVector<S>& v) {
  return q(v);
}

template <Ring S>
S polar_eval(const QuadraticForm<S>& q, const FieldVector<S>& u, const FieldVector<S>& v) {
  return q.polar(u, v);
}

template <Ring S>
QuadraticForm<S> signature_form(const Signature& s) {
  return QuadraticForm<S>::from_signature(s);
}

// Sufficient (not necessary) test for anisotropy: every diagonal entry
// strictly positive, or every entry strictly negative. The empty form counts
// as definite. Throws NotDiagonal for forms with off-diagonal terms.
template <Ring S>
  requires std::totally_ordered<S>
bool is_definite_diagonal(const QuadraticForm<S>& q) {
  if (!q.is_diagonal()) {
    throw NotDiagonal("definiteness check needs a diagonal form; diagonalize it first");
  }
  const S zero = ScalarTraits<S>::zero();
  bool all_pos = true;
  bool all_neg = true;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    all_pos = all_pos && q.basis_square(i) > zero;
    all_neg = all_neg && q.basis_square(i) < zero;
  }
  return all_pos || all_neg;
}

}  // namespace cliffq
