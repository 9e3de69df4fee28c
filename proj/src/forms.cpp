#include "mnewton/forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "mnewton/error.hpp"
#include "mnewton/kernels.hpp"
#include "mnewton/linalg.hpp"

namespace mnewton {
namespace {

void check_form_params(std::size_t n, std::size_t m) {
  if (!(m >= 1 && m + 1 <= n)) {
    throw InputError("form parameters need 1 <= m <= n-1 (got n=" + std::to_string(n) +
                     ", m=" + std::to_string(m) + ")");
  }
}

std::vector<double> incidence_matrix(std::size_t n, const std::vector<std::uint64_t>& masks) {
  std::vector<double> v(masks.size() * n, 0.0);
  for (std::size_t r = 0; r < masks.size(); ++r)
    for (std::size_t i = 0; i < n; ++i)
      if ((masks[r] >> i) & 1U) v[r * n + i] = 1.0;
  return v;
}

BigRational exact_coefficient(std::size_t n, std::size_t m, std::size_t j) {
  const BigInt mm = m;
  const BigInt nn = n;
  const BigInt jj = j;
  return BigRational(mm * (nn - mm)) -
         BigRational((mm + 1) * (nn - mm + 1) * (mm - jj), mm - jj + 1);
}

BigInt exact_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

std::string_view to_string(FormKind k) {
  switch (k) {
    case FormKind::phi:
      return "phi";
    case FormKind::tilde_phi:
      return "tilde_phi";
    case FormKind::tilde_psi:
      return "tilde_psi";
    case FormKind::psi:
      return "psi";
  }
  return "unknown";
}

FormKind parse_form_kind(std::string_view s) {
  for (auto k : {FormKind::phi, FormKind::tilde_phi, FormKind::tilde_psi, FormKind::psi}) {
    if (s == to_string(k)) return k;
  }
  throw InputError("unknown form kind '" + std::string(s) +
                   "' (expected phi, tilde_phi, tilde_psi or psi)");
}

SubsetVector minor_vector(const Matrix& a, std::size_t m) {
  return SubsetVector{a.order(), m, minors_of_size(a, m)};
}

SubsetVector ones_vector(std::size_t n, std::size_t m) {
  return SubsetVector{n, m, std::vector<double>(static_cast<std::size_t>(binomial(n, m)), 1.0)};
}

FormMatrix::FormMatrix(std::size_t n, std::size_t m, FormKind kind, std::vector<double> entries)
    : n_(n), m_(m), kind_(kind), dim_(static_cast<std::size_t>(binomial(n, m))),
      a_(std::move(entries)) {
  if (a_.size() != dim_ * dim_) throw InputError("form matrix entries do not match C(n,m)^2");
}

double FormMatrix::max_abs() const {
  double r = 0.0;
  for (double v : a_) r = std::max(r, std::abs(v));
  return r;
}

Matrix FormMatrix::to_matrix() const { return Matrix(dim_, a_); }

double form_entry(FormKind kind, std::size_t n, std::size_t m, std::size_t j) {
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double jd = static_cast<double>(j);
  switch (kind) {
    case FormKind::phi:
      return jd;
    case FormKind::tilde_phi:
      return md - jd + 1.0;
    case FormKind::tilde_psi:
      return 1.0 / (md - jd + 1.0);
    case FormKind::psi:
      return md * (nd - md) - (md + 1.0) * (nd - md + 1.0) * (md - jd) / (md - jd + 1.0);
  }
  return 0.0;
}

FormMatrix build_form(std::size_t n, std::size_t m, FormKind kind, bool override_cap) {
  check_form_params(n, m);
  const double dim_d = binomial(n, m);
  if (dim_d > static_cast<double>(kFormDimensionCap) && !override_cap) {
    throw InputError("form dimension C(" + std::to_string(n) + "," + std::to_string(m) +
                     ") exceeds the cap of " + std::to_string(kFormDimensionCap) +
                     "; pass the override to force it");
  }
  const auto masks = subset_masks(n, m);
  const std::size_t dim = masks.size();
  std::vector<double> by_overlap(m + 1);
  for (std::size_t j = 0; j <= m; ++j) by_overlap[j] = form_entry(kind, n, m, j);
  std::vector<double> a(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      a[r * dim + c] = by_overlap[static_cast<std::size_t>(std::popcount(masks[r] & masks[c]))];
  return FormMatrix(n, m, kind, std::move(a));
}

PsdReport psd_check(const FormMatrix& f, double tol) {
  PsdReport r;
  r.max_abs = f.max_abs();
  r.min_eigenvalue = sym_extreme_eigenvalues(f.to_matrix()).min;
  r.psd = r.min_eigenvalue >= -tol * r.max_abs;
  return r;
}

StructureReport structure_checks(std::size_t n, std::size_t m, double tol, bool override_cap) {
  const FormMatrix phi = build_form(n, m, FormKind::phi, override_cap);
  const FormMatrix tphi = build_form(n, m, FormKind::tilde_phi, override_cap);
  const FormMatrix tpsi = build_form(n, m, FormKind::tilde_psi, override_cap);
  const FormMatrix psi = build_form(n, m, FormKind::psi, override_cap);
  const std::size_t dim = phi.dim();
  const auto masks = subset_masks(n, m);
  const auto& k = kernels::active();

  StructureReport rep;

  // Phi = V V^T: integer entries, so the product is exact.
  const auto v = incidence_matrix(n, masks);
  std::vector<double> vt(n * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t i = 0; i < n; ++i) vt[i * dim + r] = v[r * n + i];
  std::vector<double> gram(dim * dim);
  k.gemm(v.data(), vt.data(), gram.data(), dim, n, dim);

  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double shift = (md + 1.0) * (nd - md + 1.0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      rep.gramian_deviation = std::max(rep.gramian_deviation, std::abs(gram[r * dim + c] - phi(r, c)));
      rep.complement_deviation =
          std::max(rep.complement_deviation, std::abs(tphi(r, c) + phi(r, c) - (md + 1.0)));
      rep.reciprocal_deviation =
          std::max(rep.reciprocal_deviation, std::abs(tpsi(r, c) * tphi(r, c) - 1.0));
      rep.rank_one_deviation = std::max(
          rep.rank_one_deviation, std::abs(shift * tpsi(r, c) - (nd + 1.0) - psi(r, c)));
    }
  }

  const std::vector<double> e(dim, 1.0);
  std::vector<double> psi_e(dim);
  k.gemv(psi.data().data(), dim, dim, e.data(), psi_e.data());
  for (double x : psi_e) rep.null_vector_residual = std::max(rep.null_vector_residual, std::abs(x));

  const double psi_scale = std::max(1.0, psi.max_abs());
  rep.gramian = rep.gramian_deviation == 0.0;
  rep.complement = rep.complement_deviation == 0.0;
  rep.reciprocal = rep.reciprocal_deviation <= tol;
  rep.rank_one_shift = rep.rank_one_deviation <= tol * psi_scale;
  rep.null_vector = rep.null_vector_residual <= tol * psi_scale;
  return rep;
}

BigRational binomial_identity_sum(std::size_t n, std::size_t m) {
  check_form_params(n, m);
  BigRational sum = 0;
  for (std::size_t j = 0; j <= m; ++j) {
    sum += exact_coefficient(n, m, j) * BigRational(exact_binomial(m, j) * exact_binomial(n - m, m - j));
  }
  return sum;
}

double psi_quadratic_apply(const FormMatrix& f, const SubsetVector& t) {
  if (f.kind() != FormKind::psi) throw InputError("quadratic apply expects a psi form");
  if (t.n != f.n() || t.m != f.m() || t.values.size() != f.dim()) {
    throw InputError("subset vector (n=" + std::to_string(t.n) + ", m=" + std::to_string(t.m) +
                     ", len=" + std::to_string(t.values.size()) + ") does not match form (n=" +
                     std::to_string(f.n()) + ", m=" + std::to_string(f.m()) + ")");
  }
  const auto& k = kernels::active();
  std::vector<double> ft(f.dim());
  k.gemv(f.data().data(), f.dim(), f.dim(), t.values.data(), ft.data());
  return k.dot(t.values.data(), ft.data(), f.dim());
}

std::string to_csv(const FormMatrix& f) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t r = 0; r < f.dim(); ++r) {
    for (std::size_t c = 0; c < f.dim(); ++c) {
      if (c > 0) os << ',';
      os << f(r, c);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mnewton
