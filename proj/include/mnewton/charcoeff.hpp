#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mnewton/linalg.hpp"
#include "mnewton/matrix.hpp"
#include "mnewton/spectrum.hpp"

namespace mnewton {

/// Absolute floor applied to Newton tolerances.
inline constexpr double kNewtonAbsFloor = 1e-12;

/// Normalized characteristic-polynomial coefficients c_0..c_n, where c_j is
/// the sum of the j x j principal minors divided by C(n, j). c_0 = 1.
struct CoeffVector {
  std::size_t n = 0;
  std::vector<double> c;
};

struct NewtonReport {
  /// margins[j-1] = c_j^2 - c_{j-1} c_{j+1}, j = 1..n-1.
  std::vector<double> margins;
  bool holds = true;
  /// 1-based j of the smallest margin; empty for n < 2.
  std::optional<std::size_t> worst_j;
};

CoeffVector normalized_coeffs(const Matrix& a,
                              MinorSumMethod method = MinorSumMethod::trace_recursion);

/// c_j = e_j(lambda) / C(n, j) via the one-root-at-a-time recurrence.
/// Throws InputError when the spectrum is empty, not closed under conjugation
/// within tol * scale, or leaves an imaginary residue above
/// tol * e_j(|lambda|).
CoeffVector coeffs_from_spectrum(const Spectrum& s, double tol = 1e-9);

/// holds iff every margin >= -max(tol * max(1, c_j^2), kNewtonAbsFloor).
NewtonReport newton_check(const CoeffVector& c, double tol = 1e-9);

}  // namespace mnewton
