#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cliffq {

inline constexpr std::size_t kMaxDimension = 63;

// Basis blade as a bit set: bit i set means e_{i+1} is a factor. Denotes the
// product of its factors in strictly increasing index order.
struct Blade {
  std::uint64_t bits = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint64_t b) : bits(b) {}

  // From 1-based basis indices, e.g. {1, 3} for e1e3.
  static Blade of(std::initializer_list<unsigned> indices) {
    std::uint64_t b = 0;
    for (unsigned i : indices) b |= std::uint64_t{1} << (i - 1);
    return Blade(b);
  }

  static constexpr Blade scalar() { return Blade(0); }
  static constexpr Blade vector(std::size_t i) { return Blade(std::uint64_t{1} << i); }

  constexpr unsigned grade() const { return static_cast<unsigned>(std::popcount(bits)); }
  constexpr bool contains(std::size_t i) const { return (bits >> i) & 1U; }
  constexpr bool fits(std::size_t n) const { return n >= 64 || (bits >> n) == 0; }

  // 0-based indices of the factors, increasing.
  std::vector<unsigned> indices() const {
    std::vector<unsigned> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) {
      out.push_back(static_cast<unsigned>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr bool operator==(Blade, Blade) = default;

  // Canonical order: by grade, then by bit pattern.
  friend constexpr std::strong_ordering operator<=>(Blade a, Blade b) {
    if (auto c = a.grade() <=> b.grade(); c != 0) return c;
    return a.bits <=> b.bits;
  }
};

// Number of pairs (a in A, b in B) with a > b: the transpositions needed to
// sort the concatenated word A·B.
constexpr unsigned reorder_swaps(Blade a, Blade b) {
  unsigned swaps = 0;
  for (std::uint64_t bb = b.bits; bb != 0; bb &= bb - 1) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(bb));
    swaps += static_cast<unsigned>(std::popcount(i >= 63 ? 0 : a.bits >> (i + 1)));
  }
  return swaps;
}

// All 2^n blades of an n-dimensional algebra in canonical order.
inline std::vector<Blade> all_blades(std::size_t n) {
  std::vector<Blade> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned k = 0; k <= n; ++k) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      if (static_cast<unsigned>(std::popcount(b)) == k) out.emplace_back(b);
    }
  }
  return out;
}

}  // namespace cliffq
