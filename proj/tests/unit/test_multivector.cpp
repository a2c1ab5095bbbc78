#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace cliffq;

namespace {

MV blade(std::size_t n, std::initializer_list<unsigned> idx, long c = 1) {
  return MV::blade(n, Blade::of(idx), Rational(c));
}

}  // namespace

TEST_CASE("blade basics") {
  const Blade b = Blade::of({1, 3});
  CHECK(b.bits == 0b101);
  CHECK(b.grade() == 2);
  CHECK(b.indices() == std::vector<unsigned>{0, 2});
  CHECK(Blade::of({2}) < Blade::of({1, 2}));
  CHECK(Blade::of({3}) > Blade::of({1}));
  CHECK(reorder_swaps(Blade::of({2}), Blade::of({1})) == 1);
  CHECK(reorder_swaps(Blade::of({1, 3}), Blade::of({2})) == 1);
  CHECK(reorder_swaps(Blade::of({2, 3}), Blade::of({1})) == 2);
  const auto all = all_blades(3);
  REQUIRE(all.size() == 8);
  CHECK(all[0] == Blade::scalar());
  CHECK(all[3] == Blade::of({3}));
  CHECK(all[4] == Blade::of({1, 2}));
  CHECK(all[7] == Blade::of({1, 2, 3}));
}

TEST_CASE("mv_add") {
  const MV x = blade(2, {1}) + blade(2, {1, 2}, 3);
  CHECK(mv_add(x, MV(2)) == x);
  CHECK(mv_add(blade(2, {1}), blade(2, {1})) == blade(2, {1}, 2));
  const MV sum = mv_add(blade(2, {}) + blade(2, {1}), blade(2, {}, -1));
  CHECK(sum == blade(2, {1}));
  CHECK(sum.size() == 1);
  CHECK_THROWS_AS(mv_add(blade(2, {1}), blade(3, {1})), DimensionMismatch);
}

TEST_CASE("mv_scale") {
  const MV x = blade(2, {1}, 2) + blade(2, {1, 2}, 4);
  CHECK(mv_scale(Rational(0), x).is_zero());
  CHECK(mv_scale(Rational(1), x) == x);
  CHECK(mv_scale(Rational(1, 2), x) == blade(2, {1}) + blade(2, {1, 2}, 2));
}

TEST_CASE("algebra_map and iota") {
  const Form q = Form::from_signature({1, 1, 0});
  const MV x = blade(2, {1}, 3) + blade(2, {1, 2}, -1);
  CHECK(product_general(q, algebra_map(Rational(1), 2), x) == x);
  CHECK(product_general(q, x, algebra_map(Rational(1), 2)) == x);
  CHECK(algebra_map(Rational(0), 2).is_zero());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK(product_general(q, algebra_map(a, 2), algebra_map(b, 2)) == algebra_map(a * b, 2));
    const Vec u = random_vector(rng, 2);
    const Vec v = random_vector(rng, 2);
    CHECK(iota(u + v) == iota(u) + iota(v));
    CHECK(iota(Rational(3) * u) == Rational(3) * iota(u));
  }
  CHECK(iota(Vec(3)).is_zero());
  CHECK(iota(Vec::basis(3, 0)) == blade(3, {1}));
}

TEST_CASE("grade_project and max_grade") {
  const MV x = blade(2, {}) + blade(2, {1}) + blade(2, {1, 2});
  CHECK(grade_project(x, 1) == blade(2, {1}));
  CHECK(max_grade(MV(3)) == std::nullopt);
  CHECK(max_grade(blade(2, {}, 3) + blade(2, {1, 2})) == 2u);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const MV y = random_sparse_multivector(rng, 4, 8);
    MV total(4);
    for (unsigned k = 0; k <= 4; ++k) {
      total += grade_project(y, k);
      CHECK(grade_project(grade_project(y, k), k) == grade_project(y, k));
      for (unsigned j = 0; j <= 4; ++j) {
        if (j != k) CHECK(grade_project(grade_project(y, k), j).is_zero());
      }
    }
    CHECK(total == y);
  }
}

TEST_CASE("module axioms and canonical form on random multivectors") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 5;
    const MV a = random_sparse_multivector(rng, n, 6);
    const MV b = random_sparse_multivector(rng, n, 6);
    const MV c = random_sparse_multivector(rng, n, 6);
    const Rational r = random_rational(rng);
    const Rational s = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a - a == MV(n));
    CHECK(r * (a + b) == r * a + r * b);
    CHECK((r + s) * a == r * a + s * a);
    CHECK((r * s) * a == r * (s * a));
    for (const MV& m : {a + b, a - b, r * a, a - a, (a + b) - b}) CHECK(m.is_canonical());
  }
}

TEST_CASE("dimension limits") {
  CHECK_THROWS_AS(MV(64), Error);
  CHECK_NOTHROW(MV(63));
  CHECK_THROWS_AS(MV::blade(2, Blade::of({3})), Error);
}

TEST_CASE("iteration order is grade then bit pattern") {
  MV m(3);
  m.add_term(Blade::of({1, 2, 3}), Rational(1));
  m.add_term(Blade::of({3}), Rational(1));
  m.add_term(Blade::of({1, 2}), Rational(1));
  m.add_term(Blade::scalar(), Rational(1));
  m.add_term(Blade::of({1}), Rational(1));
  std::vector<std::uint64_t> bits;
  for (const auto& [b, c] : m.terms()) bits.push_back(b.bits);
  CHECK(bits == std::vector<std::uint64_t>{0, 1, 4, 3, 7});
}
