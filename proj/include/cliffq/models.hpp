#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffq/multivector.hpp"
#include "cliffq/quadratic_form.hpp"
#include "cliffq/rational.hpp"

namespace cliffq {

using Vec = FieldVector<Rational>;
using Form = QuadraticForm<Rational>;
using MV = Multivector<Rational>;

struct ComplexPair {
  Rational re;
  Rational im;

  friend ComplexPair operator+(const ComplexPair& a, const ComplexPair& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexPair operator-(const ComplexPair& a, const ComplexPair& b) {
    return {a.re - b.re, a.im - b.im};
  }
  ComplexPair operator-() const { return {-re, -im}; }
  friend ComplexPair operator*(const ComplexPair& a, const ComplexPair& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexPair operator*(const Rational& s, const ComplexPair& a) {
    return {s * a.re, s * a.im};
  }
  friend bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

struct QuaternionQuad {
  Rational r;
  Rational i;
  Rational j;
  Rational k;

  friend QuaternionQuad operator+(const QuaternionQuad& a, const QuaternionQuad& b) {
    return {a.r + b.r, a.i + b.i, a.j + b.j, a.k + b.k};
  }
  friend QuaternionQuad operator-(const QuaternionQuad& a, const QuaternionQuad& b) {
    return {a.r - b.r, a.i - b.i, a.j - b.j, a.k - b.k};
  }
  QuaternionQuad operator-() const { return {-r, -i, -j, -k}; }
  // Hamilton product.
  friend QuaternionQuad operator*(const QuaternionQuad& a, const QuaternionQuad& b) {
    return {a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
            a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
            a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
            a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r};
  }
  friend QuaternionQuad operator*(const Rational& s, const QuaternionQuad& a) {
    return {s * a.r, s * a.i, s * a.j, s * a.k};
  }
  friend bool operator==(const QuaternionQuad&, const QuaternionQuad&) = default;
};

// Q(r) = -r² on a 1-dimensional space.
Form complex_Q();
ComplexPair to_complex(const MV& a);
MV from_complex(const ComplexPair& z);

// Q(x, y) = -x² - y²; 1, e1, e2, e1e2 correspond to 1, i, j, k.
Form quaternion_Q();
QuaternionQuad to_quaternion(const MV& a);
MV from_quaternion(const QuaternionQuad& q);

// Element of V × R × R: a direction in V plus n0 and n∞ coefficients.
struct ConformalVector {
  Vec direction;
  Rational c_n0;
  Rational c_ni;

  std::size_t base_dim() const { return direction.dim(); }

  friend ConformalVector operator+(const ConformalVector& a, const ConformalVector& b) {
    return {a.direction + b.direction, a.c_n0 + b.c_n0, a.c_ni + b.c_ni};
  }
  friend ConformalVector operator-(const ConformalVector& a, const ConformalVector& b) {
    return {a.direction - b.direction, a.c_n0 - b.c_n0, a.c_ni - b.c_ni};
  }
  friend ConformalVector operator*(const Rational& s, const ConformalVector& a) {
    return {s * a.direction, s * a.c_n0, s * a.c_ni};
  }
  friend bool operator==(const ConformalVector&, const ConformalVector&) = default;
};

struct ConformalParts {
  Vec direction;
  Rational c_n0;
  Rational c_ni;
};

ConformalParts conformal_parts(const ConformalVector& x);
ConformalVector of_v(const Vec& x);
ConformalVector n0(std::size_t n);
ConformalVector ni(std::size_t n);

// Σ x_i², the standard inner product on coordinates.
Rational norm_sq(const Vec& x);

// n0 + x + ½‖x‖² n∞.
ConformalVector up(const Vec& x);

// Coordinates in the (n+2)-dimensional CGA basis: V coordinates, then n0,
// then n∞.
Vec conformal_coords(const ConformalVector& x);

// Q(x) = ‖x.v‖² - 2·c_n0·c_ni. The n0/n∞ block has B(n0,n∞) = -1.
Form cga_Q(std::size_t n);

struct Preset {
  std::string name;
  Form form;
  std::vector<std::string> labels;
  // Set for conformal presets: the dimension of the base space V.
  std::optional<std::size_t> conformal_dim;
};

const std::vector<std::string>& preset_names();

// Throws Error listing valid names for unknown presets.
Preset preset(std::string_view name);

}  // namespace cliffq
