#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mnewton/matrix.hpp"

namespace mnewton {

using BigInt = boost::multiprecision::cpp_int;

/// Largest order accepted by the pair sums without override.
inline constexpr std::size_t kSFunctionCap = 20;

/// Parameters of S_{m1,m2,k}: ordered pairs (alpha, beta) of subsets of
/// {1..n} with #alpha = m1, #beta = m2 and #(alpha & beta) = k.
struct SParams {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t k = 0;
  std::size_t n = 0;

  /// k <= min(m1, m2), m1, m2 <= n and m1 + m2 - k <= n.
  bool feasible() const;
};

/// Principal minors of one matrix grouped by size, each group in colex
/// order. Built once and shared by every S evaluation on that matrix.
class MinorTable {
 public:
  /// All sizes 0..n. Throws InputError for n > kSFunctionCap unless
  /// override_cap is set.
  explicit MinorTable(const Matrix& a, bool override_cap = false);

  std::size_t order() const { return n_; }
  const std::vector<double>& of_size(std::size_t m) const { return minors_.at(m); }
  const std::vector<std::uint64_t>& masks(std::size_t m) const { return masks_.at(m); }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<double>> minors_;
  std::vector<std::vector<std::uint64_t>> masks_;
};

/// S_{m1,m2,k}(A) for every overlap k = 0..min(m1, m2) in one sweep over the
/// ordered pairs. Each entry is accumulated in colex order of (alpha, beta).
std::vector<double> s_values_by_overlap(const MinorTable& t, std::size_t m1, std::size_t m2);

/// S_{m1,m2,k}(A); 0 for infeasible parameters (empty sum).
double s_value(const MinorTable& t, const SParams& p);
double s_value(const Matrix& a, const SParams& p, bool override_cap = false);

/// S_{m1,m2,k}(I_n) = C(n,k) C(n-k, m1-k) C(n-m1, m2-k); 0 when infeasible.
BigInt s_identity(const SParams& p);

/// S_{m1,m2,k}(A) / S_{m1,m2,k}(I_n). Throws InputError when infeasible.
double normalized_s(const MinorTable& t, const SParams& p);

/// Mean over the n principal submatrices of order n-1 of their normalized
/// S values. Requires m1 + m2 - k <= n - 1.
double submatrix_average_normalized_s(const Matrix& a, const SParams& p);

struct MarginReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
  double scale = 0.0;
  bool holds = true;
};

/// S_{m,m,k}(A)/S_{m,m,k}(I) - S_{m+1,m-1,k}(A)/S_{m+1,m-1,k}(I); holds iff
/// margin >= -tol * max(|lhs|, |rhs|). Requires 0 <= k < m < n and
/// 2m - k <= n (otherwise the identity counts vanish).
MarginReport genimm_check(const MinorTable& t, std::size_t m, std::size_t k, double tol);
MarginReport genimm_check(const Matrix& a, std::size_t m, std::size_t k, double tol,
                          bool override_cap = false);

/// (m-j) S_{m,m,j}(A) - (m-j+1) S_{m+1,m-1,j}(A); holds iff
/// margin >= -tol * max(|lhs|, |rhs|). Requires 1 <= m <= n-1, j <= m.
MarginReport pointwise_check(const MinorTable& t, std::size_t m, std::size_t j, double tol);
MarginReport pointwise_check(const Matrix& a, std::size_t m, std::size_t j, double tol,
                             bool override_cap = false);

struct SweepEntry {
  std::size_t m = 0;
  std::size_t k = 0;
  MarginReport genimm;
  MarginReport pointwise;
};

/// genimm and pointwise checks for every (m, k) with 1 <= m <= n-1,
/// 0 <= k < m and 2m - k <= n.
std::vector<SweepEntry> genimm_sweep(const MinorTable& t, double tol);

struct ExpansionReport {
  double c_m_squared = 0.0;
  double same_size_sum = 0.0;  // sum_j S_{m,m,j} / C(n,m)^2
  double c_prod = 0.0;         // c_{m-1} c_{m+1}
  double mixed_size_sum = 0.0; // sum_j S_{m+1,m-1,j} / (C(n,m+1) C(n,m-1))
  double same_size_error = 0.0;
  double mixed_size_error = 0.0;
  bool holds = true;
};

/// Checks c_m^2 = sum_j S_{m,m,j}/C(n,m)^2 and
/// c_{m-1} c_{m+1} = sum_j S_{m+1,m-1,j}/(C(n,m+1) C(n,m-1)), with c from
/// the trace recursion and S from the pair sums. Errors are relative to the
/// same expressions evaluated on |minors|. Requires 1 <= m <= n-1.
ExpansionReport expansion_identity_report(const Matrix& a, std::size_t m, double tol,
                                          bool override_cap = false);
bool expansion_identity_check(const Matrix& a, std::size_t m, double tol);

}  // namespace mnewton
