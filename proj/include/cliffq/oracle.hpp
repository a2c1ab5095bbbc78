#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>

#include "cliffq/multivector.hpp"
#include "cliffq/quadratic_form.hpp"
#include "cliffq/tensor.hpp"

namespace cliffq {

namespace detail {

// First position k with w[k] >= w[k+1], i.e. the leftmost place a Clifford
// relation applies. None means the word is a canonical blade.
inline std::optional<std::size_t> first_rewrite_site(const TensorWord& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] >= w[k + 1]) return k;
  }
  return std::nullopt;
}

inline Blade word_to_blade(const TensorWord& w) {
  std::uint64_t bits = 0;
  for (auto i : w) bits |= std::uint64_t{1} << i;
  return Blade(bits);
}

template <Ring S>
void accumulate(std::map<TensorWord, S>& pool, TensorWord w, const S& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = pool.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second = it->second + c;
    if (is_zero(it->second)) pool.erase(it);
  }
}

// One rewrite of c·w at site k:
//   e_i e_i -> Q(e_i)
//   e_i e_j -> polar(e_i, e_j) - e_j e_i      (i > j)
// Each output word has smaller (length, inversions) than w.
template <Ring S>
void rewrite_at(const QuadraticForm<S>& q, const TensorWord& w, std::size_t k, const S& c,
                std::map<TensorWord, S>& pool) {
  const auto i = w[k];
  const auto j = w[k + 1];
  TensorWord shorter;
  shorter.reserve(w.size() - 2);
  shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
  if (i == j) {
    accumulate(pool, std::move(shorter), c * q.basis_square(i));
    return;
  }
  TensorWord swapped = w;
  std::swap(swapped[k], swapped[k + 1]);
  accumulate(pool, std::move(swapped), -c);
  const S pol = q.basis_polar(i, j);
  if (!is_zero(pol)) accumulate(pool, std::move(shorter), c * pol);
}

}  // namespace detail

// Reduces a tensor element modulo the Clifford relation to canonical blade
// form. Words are rewritten at their leftmost applicable site until every
// word is strictly increasing.
template <Ring S>
Multivector<S> normalize(const QuadraticForm<S>& q, const TensorElement<S>& a) {
  if (q.dim() != a.dim()) throw DimensionMismatch(q.dim(), a.dim());
  std::map<TensorWord, S> pending(a.terms());
  Multivector<S> out(a.dim());
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const TensorWord& w = node.key();
    const S& c = node.mapped();
    if (auto site = detail::first_rewrite_site(w)) {
      detail::rewrite_at(q, w, *site, c, pending);
    } else {
      out.add_term(detail::word_to_blade(w), c);
    }
  }
  return out;
}

// Geometric product for an arbitrary symmetric form: concatenate in the
// tensor algebra, then normalize.
template <Ring S>
Multivector<S> product_general(const QuadraticForm<S>& q, const Multivector<S>& a,
                               const Multivector<S>& b) {
  if (a.dim() != q.dim()) throw DimensionMismatch(q.dim(), a.dim());
  if (b.dim() != q.dim()) throw DimensionMismatch(q.dim(), b.dim());
  return normalize(
      q, tensor_mul(TensorElement<S>::from_multivector(a), TensorElement<S>::from_multivector(b)));
}

// Normalizes `a` under `trials` rewrite orders (first trial deterministic,
// the rest pick a random pending word and a random applicable site) and
// reports whether every order reached the deterministic normal form.
template <Ring S>
bool confluence_probe(const QuadraticForm<S>& q, const TensorElement<S>& a, std::size_t trials,
                      std::uint64_t seed = 0) {
  const Multivector<S> reference = normalize(q, a);
  std::mt19937_64 rng(seed);
  for (std::size_t t = 1; t < trials; ++t) {
    std::map<TensorWord, S> pending(a.terms());
    Multivector<S> out(a.dim());
    while (!pending.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      auto node = pending.extract(std::next(pending.begin(), static_cast<std::ptrdiff_t>(pick(rng))));
      const TensorWord& w = node.key();
      std::vector<std::size_t> sites;
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] >= w[k + 1]) sites.push_back(k);
      }
      if (sites.empty()) {
        out.add_term(detail::word_to_blade(w), node.mapped());
        continue;
      }
      std::uniform_int_distribution<std::size_t> site(0, sites.size() - 1);
      detail::rewrite_at(q, w, sites[site(rng)], node.mapped(), pending);
    }
    if (!(out == reference)) return false;
  }
  return true;
}

// The rewriting product with blade-pair results memoized. Thread-safe; the
// cache only stores normalize() outputs, so results are identical to
// product_general.
template <Ring S>
class OracleEngine {
 public:
  explicit OracleEngine(QuadraticForm<S> q) : form_(std::move(q)) {}

  OracleEngine(const OracleEngine& o) : form_(o.form_) {}
  OracleEngine& operator=(const OracleEngine& o) {
    if (this != &o) {
      std::scoped_lock lock(mutex_);
      form_ = o.form_;
      cache_.clear();
    }
    return *this;
  }

  const QuadraticForm<S>& form() const { return form_; }

  Multivector<S> blade_product(Blade a, Blade b) const {
    const Key key{a.bits, b.bits};
    {
      std::scoped_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    TensorWord w = blade_word(a);
    const TensorWord wb = blade_word(b);
    w.insert(w.end(), wb.begin(), wb.end());
    TensorElement<S> t(form_.dim());
    t.add_term(std::move(w), ScalarTraits<S>::one());
    Multivector<S> r = normalize(form_, t);
    std::scoped_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(r)).first->second;
  }

  Multivector<S> product(const Multivector<S>& a, const Multivector<S>& b) const {
    if (a.dim() != form_.dim()) throw DimensionMismatch(form_.dim(), a.dim());
    if (b.dim() != form_.dim()) throw DimensionMismatch(form_.dim(), b.dim());
    Multivector<S> out(form_.dim());
    for (const auto& [ba, ca] : a.terms()) {
      for (const auto& [bb, cb] : b.terms()) {
        const S cab = ca * cb;
        const Multivector<S> r = blade_product(ba, bb);
        for (const auto& [br, cr] : r.terms()) out.add_term(br, cab * cr);
      }
    }
    return out;
  }

 private:
  struct Key {
    std::uint64_t a, b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>{}(k.a * 0x9E3779B97F4A7C15ULL ^ k.b);
    }
  };

  QuadraticForm<S> form_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Key, Multivector<S>, KeyHash> cache_;
};

}  // namespace cliffq
