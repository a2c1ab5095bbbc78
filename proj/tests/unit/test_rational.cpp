#include <doctest.h>

#include <random>

#include "cliffq/random.hpp"
#include "cliffq/rational.hpp"

using cliffq::Rational;

TEST_CASE("rational parse and canonical form") {
  CHECK(Rational::parse("3").str() == "3");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational::parse("0/7").is_zero());
}

TEST_CASE("rational parse rejects malformed text") {
  for (const char* bad : {"", "3/", "/2", "a", "1.5", "3/-2", "3/0", "--1", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational field axioms hold exactly") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = cliffq::random_rational(rng, 9, 9);
    const Rational b = cliffq::random_rational(rng, 9, 9);
    const Rational c = cliffq::random_rational(rng, 9, 9);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
