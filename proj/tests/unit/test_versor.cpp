#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace cliffq;

namespace {

using V = Versor<Rational>;

MV blade(std::size_t n, std::initializer_list<unsigned> idx, long c = 1) {
  return MV::blade(n, Blade::of(idx), Rational(c));
}

Vec nonzero_vector(std::mt19937_64& rng, std::size_t n) {
  Vec v = random_vector(rng, n);
  while (v.is_zero()) v = random_vector(rng, n);
  return v;
}

V random_versor(std::mt19937_64& rng, const Algebra<Rational>& alg, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::vector<Vec> gens;
  for (std::size_t k = len(rng); k > 0; --k) gens.push_back(nonzero_vector(rng, alg.dim()));
  Rational s = random_rational(rng);
  if (s.is_zero()) s = Rational(1);
  return V::of(alg, gens, s);
}

}  // namespace

TEST_CASE("versor_mul") {
  const Algebra<Rational> alg(Form::from_signature({2, 1, 0}));
  const Vec v{Rational(1), Rational(2), Rational(0)};
  const V r = V::scalar(alg, Rational(3));
  const V w = versor_mul(alg, r, V::of(alg, {v}));
  CHECK(w.value() == Rational(3) * iota(v));
  CHECK(w.generators().size() == 1);
  const V id = V::identity(alg);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const V a = random_versor(rng, alg, 3);
    const V b = random_versor(rng, alg, 3);
    CHECK(versor_mul(alg, id, a).value() == a.value());
    CHECK(versor_mul(alg, a, id).value() == a.value());
    const V ab = versor_mul(alg, a, b);
    CHECK(ab.value() == alg.product(a.value(), b.value()));
    CHECK(ab.value() == V::of(alg, ab.generators(), ab.scale()).value());
  }
}

TEST_CASE("versor_involute and versor_reverse") {
  const Algebra<Rational> alg(Form::from_signature({3, 0, 0}));
  const V s = V::scalar(alg, Rational(2));
  CHECK(versor_involute(s).value() == s.value());
  CHECK(versor_reverse(s).value() == s.value());
  const Vec v{Rational(1), Rational(-1), Rational(1, 2)};
  const V one = V::of(alg, {v});
  CHECK(versor_involute(one).generators().front() == -v);
  CHECK(versor_involute(one).value() == -iota(v));
  const Vec a{Rational(1), Rational(2), Rational(0)};
  const Vec b{Rational(0), Rational(1), Rational(3)};
  const V ab = V::of(alg, {a, b});
  const V rev = versor_reverse(ab);
  CHECK(rev.generators() == std::vector<Vec>{b, a});
  CHECK(rev.value() == reverse(ab.value()));
  CHECK(rev.value() == V::of(alg, rev.generators()).value());
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const V u = random_versor(rng, alg, 4);
    const V inv = versor_involute(u);
    CHECK(inv.value() == involute(u.value()));
    CHECK(inv.value() == V::of(alg, inv.generators(), inv.scale()).value());
  }
}

TEST_CASE("versor_norm") {
  const Algebra<Rational> alg(Form::from_signature({2, 1, 0}));
  CHECK(versor_norm(alg, V::scalar(alg, Rational(-3))) == Rational(9));
  const Vec v{Rational(1), Rational(2), Rational(1)};
  CHECK(versor_norm(alg, V::of(alg, {v})) == alg.form()(v));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const V u = random_versor(rng, alg, 3);
    const V w = random_versor(rng, alg, 3);
    CHECK(versor_norm(alg, versor_mul(alg, u, w)) == versor_norm(alg, u) * versor_norm(alg, w));
  }
}

TEST_CASE("versor_inverse") {
  const Algebra<Rational> e1(Form::from_signature({1, 0, 0}));
  CHECK(versor_inverse(e1, V::of(e1, {Vec::basis(1, 0)})).value() == blade(1, {1}));
  const Algebra<Rational> e2(Form::from_signature({2, 0, 0}));
  const Vec v{Rational(1), Rational(1)};
  CHECK(versor_inverse(e2, V::of(e2, {v})).value() == Rational(1, 2) * iota(v));
  const Algebra<Rational> mink(Form::from_signature({1, 1, 0}));
  CHECK_THROWS_AS(versor_inverse(mink, V::of(mink, {v})), NotInvertible);
  CHECK_THROWS_AS(versor_inverse(e2, V::scalar(e2, Rational(0))), NotInvertible);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const V u = random_versor(rng, e2, 4);
    const V inv = versor_inverse(e2, u);
    CHECK(e2.product(u.value(), inv.value()) == e2.one());
    CHECK(e2.product(inv.value(), u.value()) == e2.one());
    CHECK(inv.value() == V::of(e2, inv.generators(), inv.scale()).value());
  }
}

TEST_CASE("versor_sandwich") {
  const Algebra<Rational> alg(Form::from_signature({2, 0, 0}));
  std::mt19937_64 rng(5);
  const MV x = random_sparse_multivector(rng, 2, 4);
  CHECK(versor_sandwich(alg, V::identity(alg), x) == x);
  const V r = V::of(alg, {Vec::basis(2, 0)});
  CHECK(versor_sandwich(alg, r, blade(2, {1})) == blade(2, {1}));
  CHECK(versor_sandwich(alg, r, blade(2, {2})) == blade(2, {2}, -1));
  const Algebra<Rational> null(Form::from_signature({1, 1, 0}));
  CHECK_THROWS_AS(versor_sandwich(null, V::of(null, {Vec{Rational(1), Rational(1)}}), x), NotInvertible);
}

TEST_CASE("sandwich by unit basis versors keeps vectors grade 1, n = 3") {
  const Algebra<Rational> alg(Form::from_signature({3, 0, 0}));
  for (Blade g : all_blades(3)) {
    std::vector<Vec> gens;
    for (unsigned i : g.indices()) gens.push_back(Vec::basis(3, i));
    const V u = V::of(alg, gens);
    for (std::size_t i = 0; i < 3; ++i) {
      const MV out = versor_sandwich(alg, u, alg.basis_vector(i));
      CHECK(out.max_grade() == 1u);
      CHECK(grade_project(out, 1) == out);
    }
  }
}
