#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mnewton/matrix.hpp"

namespace mnewton {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Form matrices above this dimension need an explicit override.
inline constexpr std::size_t kFormDimensionCap = 5000;

/// Quadratic forms on vectors indexed by the size-m subsets of {1..n}. Every
/// entry (alpha, beta) depends only on j = #(alpha & beta):
///   phi        j                 (Gramian of subset incidence vectors)
///   tilde_phi  m - j + 1
///   tilde_psi  1 / (m - j + 1)   (entrywise reciprocal of tilde_phi)
///   psi        m(n-m) - (m+1)(n-m+1)(m-j)/(m-j+1)
enum class FormKind { phi, tilde_phi, tilde_psi, psi };

std::string_view to_string(FormKind k);
/// Accepts "phi", "tilde_phi", "tilde_psi", "psi".
FormKind parse_form_kind(std::string_view s);

/// Vector indexed by the colex-ordered size-m subsets of {1..n}.
struct SubsetVector {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> values;
};

/// a(m) = (A[alpha]) over the size-m subsets, colex order.
SubsetVector minor_vector(const Matrix& a, std::size_t m);

/// The all-ones vector e.
SubsetVector ones_vector(std::size_t n, std::size_t m);

/// Dense symmetric C(n,m) x C(n,m) representation matrix.
class FormMatrix {
 public:
  FormMatrix(std::size_t n, std::size_t m, FormKind kind, std::vector<double> entries);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  FormKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  std::span<const double> data() const { return a_; }
  double max_abs() const;
  /// Copy as a square Matrix (for the eigensolver).
  Matrix to_matrix() const;

 private:
  std::size_t n_;
  std::size_t m_;
  FormKind kind_;
  std::size_t dim_;
  std::vector<double> a_;
};

/// Entry value for overlap j.
double form_entry(FormKind kind, std::size_t n, std::size_t m, std::size_t j);

/// Requires 1 <= m <= n-1 and C(n,m) <= kFormDimensionCap (unless
/// override_cap). Throws InputError otherwise.
FormMatrix build_form(std::size_t n, std::size_t m, FormKind kind, bool override_cap = false);

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double max_abs = 0.0;
};

/// psd iff min eigenvalue >= -tol * max|F|.
PsdReport psd_check(const FormMatrix& f, double tol = 1e-8);

struct StructureReport {
  bool gramian = false;        // phi = V V^T with V the subset/element incidence matrix
  bool complement = false;     // tilde_phi + phi = (m+1) e e^T
  bool reciprocal = false;     // tilde_psi o tilde_phi = e e^T entrywise
  bool rank_one_shift = false; // psi = (m+1)(n-m+1) tilde_psi - (n+1) e e^T
  bool null_vector = false;    // |psi e|_inf <= tol * max|psi|
  double gramian_deviation = 0.0;
  double complement_deviation = 0.0;
  double reciprocal_deviation = 0.0;
  double rank_one_deviation = 0.0;
  double null_vector_residual = 0.0;

  bool all() const {
    return gramian && complement && reciprocal && rank_one_shift && null_vector;
  }
};

StructureReport structure_checks(std::size_t n, std::size_t m, double tol = 1e-10,
                                 bool override_cap = false);

/// sum_{j=0}^{m} (m(n-m) - (m+1)(n-m+1)(m-j)/(m-j+1)) C(m,j) C(n-m,m-j) in
/// exact rational arithmetic. Requires 1 <= m <= n-1.
BigRational binomial_identity_sum(std::size_t n, std::size_t m);

/// t^T F t. F must be of kind psi and t must match its (n, m).
double psi_quadratic_apply(const FormMatrix& f, const SubsetVector& t);

/// Dense CSV (one row per line, full precision).
std::string to_csv(const FormMatrix& f);

}  // namespace mnewton
