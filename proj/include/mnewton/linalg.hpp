#pragma once

#include <cstddef>
#include <vector>

#include "mnewton/matrix.hpp"
#include "mnewton/spectrum.hpp"

namespace mnewton {

/// |pivot| <= kPivotTolerance * max|row| is treated as an exact zero pivot.
inline constexpr double kPivotTolerance = 1e-13;

/// Largest order accepted by exhaustive minor enumeration without override.
inline constexpr std::size_t kEnumerationCap = 16;

/// det A by row-pivoted Gaussian elimination. Singular input yields 0.
double determinant(const Matrix& a);

/// A[alpha]; 1 for the empty set.
double principal_minor(const Matrix& a, const IndexSet& alpha);

/// All minors of size m in colex order of the index sets (1 entry for m = 0).
std::vector<double> minors_of_size(const Matrix& a, std::size_t m);

enum class MinorSumMethod { trace_recursion, enumeration };

/// E_0..E_n with E_j the sum of all j x j principal minors (E_0 = 1).
///
/// trace_recursion runs the Faddeev-LeVerrier recursion
///   M_1 = I,  c_k = -tr(A M_k)/k,  M_{k+1} = A M_k + c_k I,
/// where det(xI - A) = x^n + c_1 x^(n-1) + ... + c_n and E_j = (-1)^j c_j.
/// enumeration sums every principal minor directly; it is capped at
/// n <= kEnumerationCap unless override_cap is set.
std::vector<double> minor_sums(const Matrix& a,
                               MinorSumMethod method = MinorSumMethod::trace_recursion,
                               bool override_cap = false);

/// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
/// InputError for a (numerically) singular matrix.
Matrix inverse(const Matrix& a);

/// Eigenvalues of a symmetric matrix, ascending. Throws InputError when the
/// matrix is not symmetric to within 1e-12 * max|S|.
std::vector<double> sym_eigenvalues(const Matrix& s);

/// Largest and smallest eigenvalue of a symmetric matrix.
struct SymExtremes {
  double min;
  double max;
};
SymExtremes sym_extreme_eigenvalues(const Matrix& s);

/// All complex roots with multiplicity: exact zero roots are split off
/// first, the rest are eigenvalues of the companion matrix polished by a few
/// Newton steps. Roots are ordered by decreasing real part, then decreasing
/// imaginary part. Throws InputError for constants and the zero polynomial.
Spectrum poly_roots(const RealPoly& p);

}  // namespace mnewton
