#include "cliffq/random.hpp"

namespace cliffq {

namespace {

MV derive(std::mt19937_64& rng, const Algebra<Rational>& alg, unsigned depth) {
  std::uniform_int_distribution<int> kind(0, depth == 0 ? 1 : 3);
  switch (kind(rng)) {
    case 0: return MV::scalar(alg.dim(), random_rational(rng));
    case 1: return MV::vector(random_vector(rng, alg.dim()));
    case 2: {
      MV a = derive(rng, alg, depth - 1);
      return a + derive(rng, alg, depth - 1);
    }
    default: {
      MV a = derive(rng, alg, depth - 1);
      return alg.product(a, derive(rng, alg, depth - 1));
    }
  }
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  const long n = num(rng);
  return Rational(n, den(rng));
}

Vec random_vector(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_rational(rng);
  return v;
}

MV random_multivector(std::uint64_t seed, const Algebra<Rational>& alg, unsigned depth) {
  std::mt19937_64 rng(seed);
  return derive(rng, alg, depth);
}

MV random_multivector(std::uint64_t seed, std::size_t n, const Form& q, unsigned depth) {
  if (q.dim() != n) throw DimensionMismatch(n, q.dim());
  return random_multivector(seed, Algebra<Rational>(q), depth);
}

MV random_sparse_multivector(std::mt19937_64& rng, std::size_t n, std::size_t max_terms) {
  std::uniform_int_distribution<std::uint64_t> blade(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_terms));
  MV m(n);
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    Rational c = random_rational(rng);
    if (c.is_zero()) c = Rational(1);
    m.add_term(Blade(blade(rng)), c);
  }
  return m;
}

}  // namespace cliffq
