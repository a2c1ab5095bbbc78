#pragma once

// Shared helpers for the test suites: random inputs and an exact rank
// computation that is independent of the library's product engines.

#include <cstddef>
#include <random>
#include <vector>

#include "cliffq/cliffq.hpp"

namespace cliffq::testing {

// Every diagonal signature with p+q+r == n.
inline std::vector<Signature> signatures_of_dim(std::size_t n) {
  std::vector<Signature> out;
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t q = 0; p + q <= n; ++q) out.push_back({p, q, n - p - q});
  }
  return out;
}

inline std::vector<Signature> signatures_up_to(std::size_t max_dim) {
  std::vector<Signature> out;
  for (std::size_t n = 0; n <= max_dim; ++n) {
    for (const auto& s : signatures_of_dim(n)) out.push_back(s);
  }
  return out;
}

inline Form random_symmetric_form(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m[i * n + j] = random_rational(rng);
      m[j * n + i] = m[i * n + j];
    }
  }
  return Form(n, std::move(m));
}

// Rank of a list of vectors by exact Gaussian elimination.
inline std::size_t rank_of(const std::vector<Vec>& rows_in) {
  if (rows_in.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : rows_in) rows.push_back(v.coords());
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::string label(std::size_t n, const MV& m) { return format_human(m, default_labels(n)); }

}  // namespace cliffq::testing
