#include "mnewton/charcoeff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mnewton/error.hpp"

namespace mnewton {

CoeffVector normalized_coeffs(const Matrix& a, MinorSumMethod method) {
  const auto e = minor_sums(a, method);
  const std::size_t n = a.order();
  CoeffVector out{n, std::vector<double>(n + 1)};
  for (std::size_t j = 0; j <= n; ++j) out.c[j] = e[j] / binomial(n, j);
  out.c[0] = 1.0;
  return out;
}

CoeffVector coeffs_from_spectrum(const Spectrum& s, double tol) {
  if (s.size() == 0) throw InputError("spectrum must be nonempty");
  if (!is_conjugate_closed(s, tol)) {
    throw InputError("spectrum is not closed under complex conjugation");
  }
  const auto e = elementary_symmetric(s);
  const auto e_abs = elementary_symmetric_abs(s);
  const std::size_t n = s.size();
  CoeffVector out{n, std::vector<double>(n + 1)};
  for (std::size_t j = 0; j <= n; ++j) {
    if (std::abs(e[j].imag()) > tol * std::max(1.0, e_abs[j])) {
      throw InputError("elementary symmetric function e_" + std::to_string(j) +
                       " has a non-negligible imaginary part");
    }
    out.c[j] = e[j].real() / binomial(n, j);
  }
  out.c[0] = 1.0;
  return out;
}

NewtonReport newton_check(const CoeffVector& c, double tol) {
  NewtonReport rep;
  const std::size_t n = c.n;
  if (c.c.size() != n + 1) throw InputError("coefficient vector length must be n + 1");
  for (std::size_t j = 1; j + 1 <= n; ++j) {
    const double margin = c.c[j] * c.c[j] - c.c[j - 1] * c.c[j + 1];
    rep.margins.push_back(margin);
    const double bound = std::max(tol * std::max(1.0, c.c[j] * c.c[j]), kNewtonAbsFloor);
    if (margin < -bound) rep.holds = false;
  }
  if (!rep.margins.empty()) {
    const auto it = std::min_element(rep.margins.begin(), rep.margins.end());
    rep.worst_j = static_cast<std::size_t>(it - rep.margins.begin()) + 1;
  }
  return rep;
}

}  // namespace mnewton
