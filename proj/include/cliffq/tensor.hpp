#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "cliffq/multivector.hpp"

namespace cliffq {

// A word e_{w0} e_{w1} ... in the free algebra on the basis; indices are
// 0-based. The empty word is the unit.
using TensorWord = std::vector<std::uint8_t>;

inline TensorWord blade_word(Blade b) {
  TensorWord w;
  for (unsigned i : b.indices()) w.push_back(static_cast<std::uint8_t>(i));
  return w;
}

// Formal linear combination of basis words: an element of the tensor
// algebra before the Clifford relation is imposed.
template <Ring S>
class TensorElement {
 public:
  using Terms = std::map<TensorWord, S>;

  TensorElement() = default;
  explicit TensorElement(std::size_t n) : dim_(n) {}

  // From 1-based indices, e.g. word(3, {2, 1}) for e2 e1.
  static TensorElement word(std::size_t n, std::initializer_list<unsigned> indices,
                            S coeff = ScalarTraits<S>::one()) {
    TensorWord w;
    for (unsigned i : indices) w.push_back(static_cast<std::uint8_t>(i - 1));
    TensorElement t(n);
    t.add_term(std::move(w), coeff);
    return t;
  }

  // Canonical blades are already words, so embedding is coefficient-for-word.
  static TensorElement from_multivector(const Multivector<S>& m) {
    TensorElement t(m.dim());
    for (const auto& [b, c] : m.terms()) t.add_term(blade_word(b), c);
    return t;
  }

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(TensorWord w, const S& c) {
    for (auto i : w) {
      if (i >= dim_) throw Error("word letter e" + std::to_string(i + 1) + " outside dimension " +
                                 std::to_string(dim_));
    }
    if (cliffq::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second = it->second + c;
      if (cliffq::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch(a.dim_, b.dim_);
    for (const auto& [w, c] : b.terms_) a.add_term(w, c);
    return a;
  }

  friend TensorElement operator*(const S& s, const TensorElement& a) {
    TensorElement r(a.dim_);
    for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
    return r;
  }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::size_t dim_ = 0;
  Terms terms_;
};

// Free product: bilinear extension of word concatenation.
template <Ring S>
TensorElement<S> tensor_mul(const TensorElement<S>& a, const TensorElement<S>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  TensorElement<S> r(a.dim());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      TensorWord w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(std::move(w), ca * cb);
    }
  }
  return r;
}

}  // namespace cliffq
