// Test-side oracles, written independently of the library code paths.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "lrc/partition.hpp"

namespace lrc::test {

inline Partition P(int n, std::vector<std::vector<int>> blocks) {
  return Partition(n, std::move(blocks));
}

/// Direct scan over all a < b < c < d.
inline bool crosses_by_quadruples(const Partition& p) {
  const auto labels = p.labels();
  const int n = p.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const int v = labels[a - 1], w = labels[b - 1];
          if (v != w && labels[c - 1] == v && labels[d - 1] == w) return true;
        }
  return false;
}

/// Catalan number as (2n)! / (n! (n+1)!).
inline BigInt catalan_by_factorials(int n) {
  BigInt num = 1, den = 1;
  for (int k = 2; k <= 2 * n; ++k) num *= k;
  for (int k = 2; k <= n; ++k) den *= k;
  for (int k = 2; k <= n + 1; ++k) den *= k;
  return num / den;
}

/// Bell numbers from Stirling numbers of the second kind.
inline BigInt bell_by_stirling(int n) {
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += s[n][k];
  return total;
}

/// Set of blocks as sets, independent of the canonical ordering.
inline std::set<std::set<int>> as_sets(const Partition& p) {
  std::set<std::set<int>> out;
  for (const auto& b : p.blocks()) out.emplace(b.begin(), b.end());
  return out;
}

inline Permutation random_permutation(int n, std::mt19937& gen) {
  std::vector<int> images(n);
  for (int k = 0; k < n; ++k) images[k] = k + 1;
  std::shuffle(images.begin(), images.end(), gen);
  return Permutation(images);
}

/// Small rational drawn from a seeded generator.
inline Rational small_rational(std::mt19937_64& gen) {
  Rational r(static_cast<long>(gen() % 13) - 6, static_cast<long>(gen() % 5) + 1);
  r.canonicalize();
  return r;
}

}  // namespace lrc::test
