#include "mnewton/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "mnewton/error.hpp"
#include "mnewton/kernels.hpp"

namespace mnewton {
namespace {

Eigen::MatrixXd to_eigen(const Matrix& a) {
  const auto n = static_cast<Eigen::Index>(a.order());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return m;
}

// Row-pivoted elimination on a copy; returns det, or 0 on a negligible pivot.
double det_in_place(std::vector<double>& w, std::size_t n) {
  if (n == 0) return 1.0;
  if (n == 1) return w[0];
  std::vector<double> row_scale(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) row_scale[i] = std::max(row_scale[i], std::abs(w[i * n + j]));

  const auto& k = kernels::active();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(w[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(w[r * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best <= kPivotTolerance * row_scale[piv] || best == 0.0) return 0.0;
    if (piv != col) {
      std::swap_ranges(w.begin() + static_cast<std::ptrdiff_t>(piv * n),
                       w.begin() + static_cast<std::ptrdiff_t>((piv + 1) * n),
                       w.begin() + static_cast<std::ptrdiff_t>(col * n));
      std::swap(row_scale[piv], row_scale[col]);
      det = -det;
    }
    const double p = w[col * n + col];
    det *= p;
    const std::size_t tail = n - col - 1;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = w[r * n + col] / p;
      if (f == 0.0) continue;
      k.axpy(-f, &w[col * n + col + 1], &w[r * n + col + 1], tail);
    }
  }
  return det;
}

}  // namespace

double determinant(const Matrix& a) {
  std::vector<double> w(a.data().begin(), a.data().end());
  return det_in_place(w, a.order());
}

double principal_minor(const Matrix& a, const IndexSet& alpha) {
  if (alpha.ambient() != a.order()) {
    throw InputError("index set ambient order " + std::to_string(alpha.ambient()) +
                     " does not match matrix order " + std::to_string(a.order()));
  }
  if (alpha.empty()) return 1.0;
  return determinant(principal_submatrix(a, alpha));
}

std::vector<double> minors_of_size(const Matrix& a, std::size_t m) {
  const std::size_t n = a.order();
  const auto masks = subset_masks(n, m);
  std::vector<double> out;
  out.reserve(masks.size());
  std::vector<std::size_t> idx;
  std::vector<double> w;
  for (auto mask : masks) {
    if (m == 0) {
      out.push_back(1.0);
      continue;
    }
    idx.clear();
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
      idx.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
    w.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) w[i * m + j] = a(idx[i], idx[j]);
    out.push_back(det_in_place(w, m));
  }
  return out;
}

std::vector<double> minor_sums(const Matrix& a, MinorSumMethod method, bool override_cap) {
  const std::size_t n = a.order();
  if (n == 0) throw InputError("minor sums need a matrix of order >= 1");
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;

  if (method == MinorSumMethod::enumeration) {
    if (n > kEnumerationCap && !override_cap) {
      throw InputError("exhaustive minor enumeration is capped at n <= " +
                       std::to_string(kEnumerationCap) + " (order " + std::to_string(n) +
                       "); pass the override to force it");
    }
    for (std::size_t j = 1; j <= n; ++j) {
      const auto minors = minors_of_size(a, j);
      e[j] = std::accumulate(minors.begin(), minors.end(), 0.0);
    }
    return e;
  }

  const auto& k = kernels::active();
  std::vector<double> m_k(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m_k[i * n + i] = 1.0;
  std::vector<double> am(n * n);
  for (std::size_t step = 1; step <= n; ++step) {
    k.gemm(a.data().data(), m_k.data(), am.data(), n, n, n);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
    const double c = -tr / static_cast<double>(step);
    e[step] = (step % 2 == 0) ? c : -c;
    if (step == n) break;
    m_k.swap(am);
    for (std::size_t i = 0; i < n; ++i) m_k[i * n + i] += c;
  }
  return e;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.order();
  if (n == 0) throw InputError("cannot invert an empty matrix");
  const std::size_t w2 = 2 * n;
  std::vector<double> w(n * w2, 0.0);
  std::vector<double> row_scale(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w[i * w2 + j] = a(i, j);
      row_scale[i] = std::max(row_scale[i], std::abs(a(i, j)));
    }
    w[i * w2 + n + i] = 1.0;
  }
  const auto& k = kernels::active();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(w[col * w2 + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(w[r * w2 + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best <= kPivotTolerance * row_scale[piv] || best == 0.0) {
      throw InputError("matrix is singular to working precision");
    }
    if (piv != col) {
      std::swap_ranges(w.begin() + static_cast<std::ptrdiff_t>(piv * w2),
                       w.begin() + static_cast<std::ptrdiff_t>((piv + 1) * w2),
                       w.begin() + static_cast<std::ptrdiff_t>(col * w2));
      std::swap(row_scale[piv], row_scale[col]);
    }
    const double p = w[col * w2 + col];
    for (std::size_t j = 0; j < w2; ++j) w[col * w2 + j] /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = w[r * w2 + col];
      if (f == 0.0) continue;
      k.axpy(-f, &w[col * w2], &w[r * w2], w2);
    }
  }
  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = w[i * w2 + n + j];
  return inv;
}

std::vector<double> sym_eigenvalues(const Matrix& s) {
  if (!s.is_symmetric(1e-12)) throw InputError("matrix is not symmetric");
  if (s.empty()) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(s), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConstructionError("symmetric eigensolver failed");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

SymExtremes sym_extreme_eigenvalues(const Matrix& s) {
  const auto ev = sym_eigenvalues(s);
  if (ev.empty()) return {0.0, 0.0};
  return {ev.front(), ev.back()};
}

namespace {

Complex derivative_at(const std::vector<double>& c, Complex x) {
  Complex acc{0.0, 0.0};
  const std::size_t d = c.size() - 1;
  for (std::size_t i = 0; i < d; ++i) acc = acc * x + c[i] * static_cast<double>(d - i);
  return acc;
}

Complex polish(const RealPoly& p, Complex x) {
  Complex best = x;
  double best_res = std::abs(p(x));
  for (int it = 0; it < 4 && best_res > 0.0; ++it) {
    const Complex d = derivative_at(p.coeffs(), best);
    if (std::abs(d) == 0.0) break;
    const Complex next = best - p(best) / d;
    const double res = std::abs(p(next));
    if (!(res < best_res)) break;
    best = next;
    best_res = res;
  }
  return best;
}

}  // namespace

Spectrum poly_roots(const RealPoly& p) {
  if (p.is_zero()) throw InputError("the zero polynomial has no well-defined roots");
  if (p.degree() == 0) throw InputError("polynomial degree must be >= 1");

  std::vector<double> c = p.coeffs();
  Spectrum roots;
  while (c.size() > 1 && c.back() == 0.0) {
    roots.values.emplace_back(0.0, 0.0);
    c.pop_back();
  }
  const std::size_t d = c.size() - 1;
  if (d > 0) {
    const RealPoly reduced(c);
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d),
                                                 static_cast<Eigen::Index>(d));
    for (std::size_t j = 0; j < d; ++j) comp(0, static_cast<Eigen::Index>(j)) = -c[j + 1] / c[0];
    for (std::size_t i = 1; i < d; ++i)
      comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    if (solver.info() != Eigen::Success) throw ConstructionError("companion eigensolver failed");
    const auto ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      const Complex z = ev(i);
      if (z.imag() == 0.0) {
        Complex r = polish(reduced, z);
        roots.values.emplace_back(r.real(), 0.0);
      } else if (z.imag() > 0.0) {
        const Complex r = polish(reduced, z);
        roots.values.push_back(r);
        roots.values.push_back(std::conj(r));
      }
    }
  }
  std::sort(roots.values.begin(), roots.values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return roots;
}

}  // namespace mnewton
