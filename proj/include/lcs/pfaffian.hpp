#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lcs/linalg.hpp"
#include "lcs/sparse_poly.hpp"

namespace lcs {

namespace detail {

/// Pfaffian of a skew matrix given as a flat row-major array, by expansion
/// along the first surviving row with memoization on the index subset.
/// Works over any ring K with +, *, unary -.
template <typename K>
K pfaffian_flat(const std::vector<K>& a, int n) {
  if (n == 0) return K(1);
  std::unordered_map<std::uint64_t, K> memo;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  // recursive lambda over the bitmask of surviving indices
  auto rec = [&](auto&& self, std::uint64_t mask) -> K {
    if (mask == 0) return K(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int first = -1;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      if (first < 0)
        first = i;
      else
        rest.push_back(i);
    }
    K acc = K(0);
    bool positive = true;  // sign (-1)^k alternates over the k-th partner
    for (int j : rest) {
      const K& entry = a[static_cast<std::size_t>(first) * n + j];
      std::uint64_t sub = mask & ~(1ull << first) & ~(1ull << j);
      K contrib = entry * self(self, sub);
      acc = positive ? acc + contrib : acc - contrib;
      positive = !positive;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  std::uint64_t full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
  return rec(rec, full);
}

}  // namespace detail

/// Exact Pfaffian of a skew-symmetric rational matrix of even size.
Rational pfaffian(const RatMatrix& m);

/// Pfaffian of sum_i t_i * B_i as a polynomial in t1..tk, for a family of
/// skew-symmetric matrices of common even size 2n <= 12. The empty family
/// yields the zero polynomial.
SparsePoly pfaffian_generic(const std::vector<RatMatrix>& family);

bool is_skew_symmetric(const RatMatrix& m);

}  // namespace lcs
