#include "mnewton/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mnewton {

double Spectrum::scale() const {
  double m = 1.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

Spectrum Spectrum::real(const std::vector<double>& v) {
  Spectrum s;
  s.values.reserve(v.size());
  for (double x : v) s.values.emplace_back(x, 0.0);
  return s;
}

RealPoly::RealPoly(std::vector<double> descending) : c_(std::move(descending)) {
  auto first = std::find_if(c_.begin(), c_.end(), [](double v) { return v != 0.0; });
  c_.erase(c_.begin(), first);
}

Complex RealPoly::operator()(Complex x) const {
  Complex acc{0.0, 0.0};
  for (double c : c_) acc = acc * x + c;
  return acc;
}

double RealPoly::abs_scale(Complex x) const {
  const double r = std::abs(x);
  double acc = 0.0;
  for (double c : c_) acc = acc * r + std::abs(c);
  return acc;
}

bool is_conjugate_closed(const Spectrum& s, double tol) {
  const double bound = tol * s.scale();
  const std::size_t n = s.size();
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    const Complex v = s.values[i];
    if (std::abs(v.imag()) <= bound) {
      used[i] = true;
      continue;
    }
    used[i] = true;
    std::size_t best = n;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = std::abs(s.values[j] - std::conj(v));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == n || best_dist > bound) return false;
    used[best] = true;
  }
  return true;
}

std::vector<Complex> elementary_symmetric(const Spectrum& s) {
  const std::size_t n = s.size();
  std::vector<Complex> e(n + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += s.values[i] * e[j - 1];
  }
  return e;
}

std::vector<double> elementary_symmetric_abs(const Spectrum& s) {
  const std::size_t n = s.size();
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::abs(s.values[i]);
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += r * e[j - 1];
  }
  return e;
}

RealPoly poly_from_roots(const Spectrum& s) {
  const auto e = elementary_symmetric(s);
  std::vector<double> c(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) c[j] = (j % 2 == 0 ? 1.0 : -1.0) * e[j].real();
  return RealPoly(std::move(c));
}

}  // namespace mnewton
