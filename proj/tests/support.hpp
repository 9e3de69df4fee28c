#pragma once

// Helpers shared by the unit tests and the acceptance binary. The oracles here
// are deliberately naive and do not reuse library code paths beyond
// principal_minor.

#include <cmath>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "mnewton/linalg.hpp"
#include "mnewton/matrix.hpp"

namespace testsupport {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline mnewton::Matrix random_matrix(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                     double hi = 1.0) {
  std::vector<double> v(n * n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return mnewton::Matrix(n, std::move(v));
}

inline mnewton::Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  mnewton::Matrix a = random_matrix(rng, n);
  return (a + a.transpose()) * 0.5;
}

// Cofactor expansion along the first row. Exponential; n <= 8 only.
inline double cofactor_det(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1.0;
  if (n == 1) return a[0][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(row);
    }
    det += ((c % 2 == 0) ? 1.0 : -1.0) * a[0][c] * cofactor_det(sub);
  }
  return det;
}

inline double cofactor_minor(const mnewton::Matrix& a, std::uint64_t mask) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < a.order(); ++i)
    if (mask >> i & 1U) idx.push_back(static_cast<int>(i));
  std::vector<std::vector<double>> sub(idx.size(), std::vector<double>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      sub[r][c] = a(static_cast<std::size_t>(idx[r]), static_cast<std::size_t>(idx[c]));
  return cofactor_det(sub);
}

// Sum of products of minors over ordered subset pairs, straight from the
// definition with a full 4^n mask sweep.
inline double brute_s(const mnewton::Matrix& a, int m1, int m2, int k) {
  const std::size_t n = a.order();
  const std::uint64_t lim = std::uint64_t{1} << n;
  std::vector<double> minor(lim);
  for (std::uint64_t s = 0; s < lim; ++s) minor[s] = cofactor_minor(a, s);
  double total = 0.0;
  for (std::uint64_t x = 0; x < lim; ++x) {
    if (std::popcount(x) != m1) continue;
    for (std::uint64_t y = 0; y < lim; ++y) {
      if (std::popcount(y) != m2 || std::popcount(x & y) != k) continue;
      total += minor[x] * minor[y];
    }
  }
  return total;
}

inline double rel_err(double got, double want, double scale) {
  return std::abs(got - want) / std::max(scale, 1e-300);
}

}  // namespace testsupport
