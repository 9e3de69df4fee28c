#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mnewton {

using Complex = std::complex<double>;

/// Multiset of complex numbers, e.g. a candidate eigenvalue tuple.
struct Spectrum {
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  /// max |lambda_i|, or 1 when that is smaller than 1 (tolerance scale).
  double scale() const;

  static Spectrum real(const std::vector<double>& v);
};

/// Real polynomial, coefficients in descending powers. Leading zeros are
/// stripped on construction, so the leading coefficient is nonzero unless the
/// polynomial is identically zero.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::vector<double> descending);

  const std::vector<double>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; 0 for constants and for the zero polynomial.
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

  Complex operator()(Complex x) const;
  /// sum |c_i| |x|^(d-i): magnitude scale for residuals at x.
  double abs_scale(Complex x) const;

 private:
  std::vector<double> c_;
};

/// Greedy conjugate pairing: every element with |Im| > tol*scale must be
/// matched to a distinct partner within tol*scale of its conjugate.
bool is_conjugate_closed(const Spectrum& s, double tol);

/// e_0..e_n of the elements, built one root at a time.
std::vector<Complex> elementary_symmetric(const Spectrum& s);

/// e_0..e_n of |lambda_i|; bounds |e_j| and sets the scale for residues.
std::vector<double> elementary_symmetric_abs(const Spectrum& s);

/// Monic polynomial prod (x - lambda_i) with imaginary parts dropped.
RealPoly poly_from_roots(const Spectrum& s);

}  // namespace mnewton
