#include "mnewton/niep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mnewton/charcoeff.hpp"
#include "mnewton/error.hpp"
#include "mnewton/linalg.hpp"

namespace mnewton {
namespace {

constexpr double kJllNoiseFloor = 1e-12;

// sum_i |lambda_i|^k for k = 1..K.
std::vector<double> abs_moments(const Spectrum& s, std::size_t max_k) {
  std::vector<double> out(max_k, 0.0);
  for (const auto& v : s.values) {
    const double r = std::abs(v);
    double p = 1.0;
    for (std::size_t k = 0; k < max_k; ++k) {
      p *= r;
      out[k] += p;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

bool ScreeningReport::passes() const {
  for (const auto* c : {&moments, &jll, &newton_shift, &laffey_meehan})
    if (c->status == Status::fail) return false;
  return true;
}

std::vector<double> moments(const Spectrum& s, std::size_t max_k, double tol) {
  if (max_k == 0) throw InputError("moment count K must be >= 1");
  if (!is_conjugate_closed(s, tol)) {
    throw InputError("spectrum is not closed under complex conjugation");
  }
  std::vector<Complex> acc(max_k, Complex{0.0, 0.0});
  for (const auto& v : s.values) {
    Complex p{1.0, 0.0};
    for (std::size_t k = 0; k < max_k; ++k) {
      p *= v;
      acc[k] += p;
    }
  }
  std::vector<double> out(max_k);
  for (std::size_t k = 0; k < max_k; ++k) out[k] = acc[k].real();
  return out;
}

ConditionResult moment_condition(const Spectrum& s, std::size_t max_k, double tol) {
  const auto sk = moments(s, max_k, tol);
  const auto scale = abs_moments(s, max_k);
  ConditionResult r;
  std::size_t worst = 0;
  for (std::size_t k = 0; k < max_k; ++k) {
    if (sk[k] < sk[worst]) worst = k;
    if (sk[k] < -tol * scale[k]) r.status = Status::fail;
  }
  r.margin = sk[worst];
  r.k = worst + 1;
  r.note = "checked k = 1.." + std::to_string(max_k);
  return r;
}

ConditionResult jll_condition(const Spectrum& s, std::size_t bound, double tol) {
  if (bound < 2) throw InputError("JLL bound on k*m must be >= 2");
  const auto sk = moments(s, bound, tol);
  const auto abs_sk = abs_moments(s, bound);
  const double n = static_cast<double>(s.size());
  ConditionResult r;
  r.margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; 2 * k <= bound; ++k) {
    for (std::size_t m = 2; k * m <= bound; ++m) {
      const double lhs = std::pow(sk[k - 1], static_cast<double>(m));
      const double weight = std::pow(n, static_cast<double>(m - 1));
      const double rhs = weight * sk[k * m - 1];
      const double scale = std::max(std::abs(lhs), std::abs(rhs)) +
                           weight * kJllNoiseFloor * abs_sk[k * m - 1];
      const double slack = scale == 0.0 ? 0.0 : (rhs - lhs) / scale;
      if (slack < r.margin) {
        r.margin = slack;
        r.k = k;
        r.m = m;
      }
    }
  }
  if (!std::isfinite(r.margin)) r.margin = 0.0;
  r.status = r.margin >= -tol ? Status::pass : Status::fail;
  r.note = "verified up to k*m <= " + std::to_string(bound);
  return r;
}

ConditionResult newton_shift_condition(const Spectrum& s, double tol) {
  ConditionResult r;
  if (s.size() == 0) throw InputError("spectrum must be nonempty");
  const double scale = s.scale();
  double rho = 0.0;
  for (const auto& v : s.values) rho = std::max(rho, std::abs(v));

  std::size_t chosen = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Complex v = s.values[i];
    if (std::abs(v) < rho - tol * scale) continue;
    if (std::abs(v.imag()) > tol * scale || v.real() < -tol * scale) continue;
    if (chosen == s.size() || v.real() > s.values[chosen].real()) chosen = i;
  }
  if (chosen == s.size()) {
    r.status = Status::not_applicable;
    r.note = "no maximum-modulus element is real and nonnegative (not a Perron candidate)";
    return r;
  }

  const double lambda1 = s.values[chosen].real();
  Spectrum shifted;
  shifted.values.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    shifted.values.push_back(i == chosen ? Complex{0.0, 0.0} : Complex{lambda1, 0.0} - s.values[i]);
  }
  const NewtonReport nr = newton_check(coeffs_from_spectrum(shifted, tol), tol);
  r.status = nr.holds ? Status::pass : Status::fail;
  if (nr.worst_j) {
    r.j = *nr.worst_j;
    r.margin = nr.margins[*nr.worst_j - 1];
  }
  r.note = "shift by lambda_1 = " + std::to_string(lambda1);
  return r;
}

ConditionResult laffey_meehan_condition(const Spectrum& s, double tol) {
  ConditionResult r;
  const auto sk = moments(s, 4, tol);
  double abs_sum = 0.0;
  for (const auto& v : s.values) abs_sum += std::abs(v);
  if (std::abs(sk[0]) > tol * std::max(1.0, abs_sum)) {
    r.status = Status::not_applicable;
    r.note = "first moment is nonzero";
    return r;
  }
  const double n = static_cast<double>(s.size());
  const double a = (n - 1.0) * sk[3];
  const double b = sk[1] * sk[1];
  r.margin = a - b;
  r.note = "(n-1) s_4 - s_2^2";
  r.status = r.margin >= -tol * std::max(std::abs(a), std::abs(b)) ? Status::pass : Status::fail;
  return r;
}

BigInt laffey_meehan_margin_exact(std::span<const std::int64_t> values) {
  BigInt s2 = 0;
  BigInt s4 = 0;
  for (auto v : values) {
    const BigInt x = v;
    const BigInt x2 = x * x;
    s2 += x2;
    s4 += x2 * x2;
  }
  const BigInt n = static_cast<std::int64_t>(values.size());
  return (n - 1) * s4 - s2 * s2;
}

ScreeningReport screen(const Spectrum& s, const ScreeningParams& params) {
  ScreeningReport rep;
  rep.params = params;
  rep.moments = moment_condition(s, params.moment_k, params.tol);
  rep.jll = jll_condition(s, params.jll_bound, params.tol);
  rep.newton_shift = newton_shift_condition(s, params.tol);
  rep.laffey_meehan = laffey_meehan_condition(s, params.tol);
  return rep;
}

Spectrum construct_perturbed(double eps) {
  if (!(eps > 0.0 && eps <= 1e-2)) throw InputError("perturbation eps must lie in (0, 1e-2]");
  const double t1 = -eps;
  const double t2 = 13.0 * eps;
  const double a = 3.0 + t1;
  const double b = 1.0 + t2;
  auto residual = [&](double t3) {
    const double c = -2.0 + t3;
    return a * a * a + b * b * b + c * c * c - 20.0;
  };
  double t3 = -eps;  // linearized solution of 9 t1 + t2 + 4 t3 = 0
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    const double f = residual(t3);
    if (std::abs(f) <= 1e-13) {
      converged = true;
      break;
    }
    const double c = -2.0 + t3;
    t3 -= f / (3.0 * c * c);
  }
  if (!converged) throw ConstructionError("perturbed tuple: root finder did not converge");
  return Spectrum::real({a, b, 1.0, 1.0, 1.0, 1.0, -2.0 + t3, -2.0, -2.0, -2.0});
}

namespace witness_tuples {

Spectrum moments_fail_newton_pass() { return Spectrum::real({1.0, -1.0, -1.0}); }

Spectrum moments_pass_newton_fail() {
  return Spectrum{{Complex{std::sqrt(2.0), 0.0}, Complex{0.0, 1.0}, Complex{0.0, -1.0}}};
}

Spectrum unperturbed_ten_tuple() {
  return Spectrum::real({3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0});
}

RealPoly truncated_binomial_poly() { return RealPoly({1.0, -6.0, 14.0, -20.0, 0.0, 0.0, 0.0}); }

Spectrum moments_jll_pass_newton_fail() {
  const Spectrum roots = poly_roots(truncated_binomial_poly());
  double a = 0.0;
  for (const auto& z : roots.values)
    if (z.imag() == 0.0) a = std::max(a, z.real());
  Spectrum out;
  for (const auto& z : roots.values) out.values.push_back(Complex{a, 0.0} - z);
  // Largest modulus first: (a, a, a, b, conj b, 0).
  std::stable_sort(out.values.begin(), out.values.end(),
                   [](Complex x, Complex y) { return std::abs(x) > std::abs(y); });
  return out;
}

Spectrum laffey_meehan_fail() { return Spectrum::real({3.0, 3.0, -2.0, -2.0, -2.0}); }

}  // namespace witness_tuples

}  // namespace mnewton
