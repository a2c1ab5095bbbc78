#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cliffq/algebra.hpp"
#include "cliffq/models.hpp"

namespace cliffq {

// num/den with |num| <= max_num and 1 <= den <= max_den.
Rational random_rational(std::mt19937_64& rng, int max_num = 3, int max_den = 3);
Vec random_vector(std::mt19937_64& rng, std::size_t n);

// Builds a multivector from a random derivation tree whose node kinds are
// the four ways of generating the algebra: a scalar leaf, a vector leaf, a
// sum, and a product. Depth 0 yields a leaf. Pure function of the seed.
MV random_multivector(std::uint64_t seed, const Algebra<Rational>& alg, unsigned depth);
MV random_multivector(std::uint64_t seed, std::size_t n, const Form& q, unsigned depth);

// Between 1 and max_terms random blades with random nonzero coefficients.
MV random_sparse_multivector(std::mt19937_64& rng, std::size_t n, std::size_t max_terms);

}  // namespace cliffq
