#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace cliffq;

namespace {

MV blade(std::size_t n, std::initializer_list<unsigned> idx, long c = 1) {
  return MV::blade(n, Blade::of(idx), Rational(c));
}

}  // namespace

TEST_CASE("complex_Q") {
  const Form q = complex_Q();
  CHECK(q(Vec{Rational(1)}) == Rational(-1));
  CHECK(q(Vec{Rational(0)}) == Rational(0));
  CHECK(q(Vec{Rational(3, 2)}) == Rational(-9, 4));
}

TEST_CASE("complex isomorphism") {
  const Algebra<Rational> alg(complex_Q());
  CHECK(to_complex(blade(1, {1})) == ComplexPair{0, 1});
  CHECK(alg.product(blade(1, {1}), blade(1, {1})) == MV::scalar(1, Rational(-1)));
  CHECK(to_complex(MV::scalar(1, Rational(5, 3))) == ComplexPair{Rational(5, 3), 0});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const MV a = random_sparse_multivector(rng, 1, 2);
    const MV b = random_sparse_multivector(rng, 1, 2);
    CHECK(from_complex(to_complex(a)) == a);
    CHECK(to_complex(alg.product(a, b)) == to_complex(a) * to_complex(b));
    CHECK(to_complex(a + b) == to_complex(a) + to_complex(b));
    const ComplexPair z{random_rational(rng), random_rational(rng)};
    CHECK(to_complex(from_complex(z)) == z);
  }
  CHECK_THROWS_AS(to_complex(MV(2)), Error);
}

TEST_CASE("quaternion Hamilton table") {
  const Algebra<Rational> alg(quaternion_Q());
  const QuaternionQuad one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(to_quaternion(alg.product(blade(2, {1}), blade(2, {2}))) == k);
  CHECK(to_quaternion(blade(2, {1, 2})) == k);
  CHECK(to_quaternion(alg.product(blade(2, {1}), blade(2, {1}))) == -one);
  CHECK(to_quaternion(MV::scalar(2, Rational(7))) == QuaternionQuad{7, 0, 0, 0});
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j * k == -one);
  const std::vector<QuaternionQuad> units{one, i, j, k};
  const auto blades = all_blades(2);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      CHECK(to_quaternion(alg.product(MV::blade(2, blades[a]), MV::blade(2, blades[b]))) ==
            units[a] * units[b]);
    }
  }
}

TEST_CASE("conformal parts and constants") {
  const Vec x{Rational(1), Rational(-2)};
  const auto p = conformal_parts(of_v(x));
  CHECK(p.direction == x);
  CHECK(p.c_n0 == Rational(0));
  CHECK(p.c_ni == Rational(0));
  const auto o = conformal_parts(n0(2));
  CHECK(o.direction == Vec(2));
  CHECK(o.c_n0 == Rational(1));
  CHECK(o.c_ni == Rational(0));
  const auto s = conformal_parts(n0(2) + Rational(2) * ni(2));
  CHECK(s.c_n0 == Rational(1));
  CHECK(s.c_ni == Rational(2));
}

TEST_CASE("up") {
  CHECK(up(Vec(2)) == n0(2));
  CHECK(up(Vec{Rational(1), Rational(0)}) ==
        ConformalVector{Vec{Rational(1), Rational(0)}, Rational(1), Rational(1, 2)});
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 3; ++n) {
    const Form q = cga_Q(n);
    for (int i = 0; i < 100; ++i) {
      const Vec x = random_vector(rng, n);
      CHECK(q(conformal_coords(up(x))) == Rational(0));
    }
  }
}

TEST_CASE("cga_Q") {
  std::mt19937_64 rng(3);
  const Form q = cga_Q(2);
  REQUIRE(q.dim() == 4);
  const Vec x = random_vector(rng, 2);
  CHECK(q(conformal_coords(of_v(x))) == norm_sq(x));
  CHECK(q(conformal_coords(n0(2))) == Rational(0));
  CHECK(q(conformal_coords(ni(2))) == Rational(0));
  const Vec o{Rational(0), Rational(0)};
  const Vec e{Rational(1), Rational(0)};
  CHECK(q.polar(conformal_coords(up(e)), conformal_coords(up(o))) == Rational(-1));
  for (int i = 0; i < 100; ++i) {
    const ConformalVector c{random_vector(rng, 2), random_rational(rng), random_rational(rng)};
    CHECK(q(conformal_coords(c)) == norm_sq(c.direction) - Rational(2) * c.c_n0 * c.c_ni);
  }
}

TEST_CASE("presets") {
  CHECK(preset("pga3").form == Form::from_signature({3, 0, 1}));
  CHECK(preset("euclid3").form == Form::from_signature({3, 0, 0}));
  CHECK(preset("euclid2").labels == std::vector<std::string>{"e1", "e2"});
  const Preset c3 = preset("cga3");
  CHECK(c3.form.dim() == 5);
  CHECK(c3.labels == std::vector<std::string>{"e1", "e2", "e3", "n0", "ni"});
  CHECK(c3.conformal_dim == 3u);
  // The null block [[0,-1],[-1,0]] has negative determinant, so one positive
  // and one negative eigenvalue: with the identity block that is (4,1,0).
  const Rational det = c3.form.at(3, 3) * c3.form.at(4, 4) - c3.form.at(3, 4) * c3.form.at(4, 3);
  CHECK(det < Rational(0));
  CHECK(preset("complex").form == complex_Q());
  CHECK(preset("quaternion").form == quaternion_Q());
  try {
    preset("sta");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) ==
          "unknown preset 'sta' (valid presets: complex, quaternion, cga2, cga3, pga3, euclid2, euclid3)");
  }
}

TEST_CASE("contraction on the null block grades by canonical monomials") {
  const Algebra<Rational> alg(cga_Q(1));
  const MV n0 = blade(3, {2});
  const MV ni = blade(3, {3});
  // ni n0 = -n0 ni + polar(n0, ni): the scalar lands on the descending order.
  CHECK(alg.product(ni, n0) == blade(3, {2, 3}, -1) + MV::scalar(3, Rational(-2)));
  CHECK(alg.left_contraction(ni, n0) == MV::scalar(3, Rational(-2)));
  CHECK(alg.left_contraction(n0, ni).is_zero());
  const MV sym = alg.left_contraction(n0, ni) + alg.left_contraction(ni, n0);
  CHECK(sym == MV::scalar(3, cga_Q(1).polar(Vec{0, 1, 0}, Vec{0, 0, 1})));
}
