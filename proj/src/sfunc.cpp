#include "mnewton/sfunc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mnewton/charcoeff.hpp"
#include "mnewton/error.hpp"
#include "mnewton/linalg.hpp"

namespace mnewton {
namespace {

BigInt big_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

double identity_count(const SParams& p) {
  return s_identity(p).convert_to<double>();
}

MarginReport finish(double lhs, double rhs, double tol) {
  MarginReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.scale = std::max(std::abs(lhs), std::abs(rhs));
  r.holds = r.margin >= -tol * r.scale;
  return r;
}

double relative_error(double a, double b, double scale) {
  const double d = std::abs(a - b);
  const double s = std::max({std::abs(a), std::abs(b), scale});
  return s == 0.0 ? d : d / s;
}

}  // namespace

bool SParams::feasible() const {
  return k <= std::min(m1, m2) && m1 <= n && m2 <= n && m1 + m2 - k <= n;
}

MinorTable::MinorTable(const Matrix& a, bool override_cap) : n_(a.order()) {
  if (n_ > kSFunctionCap && !override_cap) {
    throw InputError("S-function sums are capped at n <= " + std::to_string(kSFunctionCap) +
                     " (order " + std::to_string(n_) + "); pass the override to force it");
  }
  minors_.reserve(n_ + 1);
  masks_.reserve(n_ + 1);
  for (std::size_t m = 0; m <= n_; ++m) {
    minors_.push_back(minors_of_size(a, m));
    masks_.push_back(subset_masks(n_, m));
  }
}

std::vector<double> s_values_by_overlap(const MinorTable& t, std::size_t m1, std::size_t m2) {
  const std::size_t n = t.order();
  std::vector<double> acc(std::min(m1, m2) + 1, 0.0);
  if (m1 > n || m2 > n) return acc;
  // Outer loop over the smaller size so that (m1, m2) and (m2, m1) add the
  // same products in the same order.
  const std::size_t outer = std::min(m1, m2);
  const std::size_t inner = std::max(m1, m2);
  const auto& ma = t.masks(outer);
  const auto& mb = t.masks(inner);
  const auto& va = t.of_size(outer);
  const auto& vb = t.of_size(inner);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const double x = va[i];
    for (std::size_t j = 0; j < mb.size(); ++j) {
      acc[static_cast<std::size_t>(std::popcount(ma[i] & mb[j]))] += x * vb[j];
    }
  }
  return acc;
}

double s_value(const MinorTable& t, const SParams& p) {
  if (p.n != t.order()) throw InputError("S parameters order does not match the matrix");
  if (!p.feasible()) return 0.0;
  return s_values_by_overlap(t, p.m1, p.m2)[p.k];
}

double s_value(const Matrix& a, const SParams& p, bool override_cap) {
  if (p.n != a.order()) throw InputError("S parameters order does not match the matrix");
  if (a.order() > kSFunctionCap && !override_cap) {
    throw InputError("S-function sums are capped at n <= " + std::to_string(kSFunctionCap));
  }
  if (!p.feasible()) return 0.0;
  return s_value(MinorTable(a, override_cap), p);
}

BigInt s_identity(const SParams& p) {
  if (!p.feasible()) return 0;
  return big_binomial(p.n, p.k) * big_binomial(p.n - p.k, p.m1 - p.k) *
         big_binomial(p.n - p.m1, p.m2 - p.k);
}

double normalized_s(const MinorTable& t, const SParams& p) {
  if (!p.feasible()) {
    throw InputError("S_{" + std::to_string(p.m1) + "," + std::to_string(p.m2) + "," +
                     std::to_string(p.k) + "} is an empty sum for n = " + std::to_string(p.n));
  }
  return s_value(t, p) / identity_count(p);
}

double submatrix_average_normalized_s(const Matrix& a, const SParams& p) {
  const std::size_t n = a.order();
  if (n < 2) throw InputError("submatrix averaging needs n >= 2");
  const SParams sub{p.m1, p.m2, p.k, n - 1};
  if (!sub.feasible()) {
    throw InputError("averaging identity needs m1 + m2 - k <= n - 1");
  }
  double sum = 0.0;
  for (const auto& alpha : enumerate_subsets(n, n - 1)) {
    const MinorTable t(principal_submatrix(a, alpha), true);
    sum += normalized_s(t, sub);
  }
  return sum / static_cast<double>(n);
}

MarginReport genimm_check(const MinorTable& t, std::size_t m, std::size_t k, double tol) {
  const std::size_t n = t.order();
  if (!(k < m && m < n)) {
    throw InputError("genimm check requires 0 <= k < m < n (got m=" + std::to_string(m) +
                     ", k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  const SParams same{m, m, k, n};
  const SParams mixed{m + 1, m - 1, k, n};
  if (!same.feasible() || !mixed.feasible()) {
    throw InputError("identity count vanishes for m=" + std::to_string(m) +
                     ", k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                     " (needs 2m - k <= n)");
  }
  return finish(normalized_s(t, same), normalized_s(t, mixed), tol);
}

MarginReport genimm_check(const Matrix& a, std::size_t m, std::size_t k, double tol,
                          bool override_cap) {
  return genimm_check(MinorTable(a, override_cap), m, k, tol);
}

MarginReport pointwise_check(const MinorTable& t, std::size_t m, std::size_t j, double tol) {
  const std::size_t n = t.order();
  if (!(m >= 1 && m + 1 <= n && j <= m)) {
    throw InputError("pointwise check requires j <= m, 1 <= m <= n-1 (got m=" +
                     std::to_string(m) + ", j=" + std::to_string(j) +
                     ", n=" + std::to_string(n) + ")");
  }
  const double same = s_value(t, SParams{m, m, j, n});
  const double mixed = s_value(t, SParams{m + 1, m - 1, j, n});
  return finish(static_cast<double>(m - j) * same, static_cast<double>(m - j + 1) * mixed, tol);
}

MarginReport pointwise_check(const Matrix& a, std::size_t m, std::size_t j, double tol,
                             bool override_cap) {
  return pointwise_check(MinorTable(a, override_cap), m, j, tol);
}

std::vector<SweepEntry> genimm_sweep(const MinorTable& t, double tol) {
  const std::size_t n = t.order();
  std::vector<SweepEntry> out;
  for (std::size_t m = 1; m < n; ++m) {
    const auto same = s_values_by_overlap(t, m, m);
    const auto mixed = s_values_by_overlap(t, m + 1, m - 1);
    for (std::size_t k = 0; k < m; ++k) {
      if (2 * m - k > n) continue;
      SweepEntry e;
      e.m = m;
      e.k = k;
      const double same_id = identity_count(SParams{m, m, k, n});
      const double mixed_id = identity_count(SParams{m + 1, m - 1, k, n});
      e.genimm = finish(same[k] / same_id, mixed[k] / mixed_id, tol);
      e.pointwise = finish(static_cast<double>(m - k) * same[k],
                           static_cast<double>(m - k + 1) * mixed[k], tol);
      out.push_back(e);
    }
  }
  return out;
}

ExpansionReport expansion_identity_report(const Matrix& a, std::size_t m, double tol,
                                          bool override_cap) {
  const std::size_t n = a.order();
  if (!(m >= 1 && m + 1 <= n)) {
    throw InputError("expansion identities require 1 <= m <= n-1");
  }
  const MinorTable t(a, override_cap);
  const CoeffVector c = normalized_coeffs(a);

  auto abs_sum = [&](std::size_t size) {
    double s = 0.0;
    for (double v : t.of_size(size)) s += std::abs(v);
    return s / binomial(n, size);
  };

  ExpansionReport r;
  const auto same = s_values_by_overlap(t, m, m);
  const auto mixed = s_values_by_overlap(t, m + 1, m - 1);
  const double cm = binomial(n, m);
  for (double v : same) r.same_size_sum += v;
  r.same_size_sum /= cm * cm;
  for (double v : mixed) r.mixed_size_sum += v;
  r.mixed_size_sum /= binomial(n, m + 1) * binomial(n, m - 1);

  r.c_m_squared = c.c[m] * c.c[m];
  r.c_prod = c.c[m - 1] * c.c[m + 1];
  const double am = abs_sum(m);
  r.same_size_error = relative_error(r.c_m_squared, r.same_size_sum, am * am);
  r.mixed_size_error = relative_error(r.c_prod, r.mixed_size_sum, abs_sum(m - 1) * abs_sum(m + 1));
  r.holds = r.same_size_error <= tol && r.mixed_size_error <= tol;
  return r;
}

bool expansion_identity_check(const Matrix& a, std::size_t m, double tol) {
  return expansion_identity_report(a, m, tol).holds;
}

}  // namespace mnewton
