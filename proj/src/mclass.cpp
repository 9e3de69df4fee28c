#include "mnewton/mclass.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "mnewton/error.hpp"
#include "mnewton/kernels.hpp"
#include "mnewton/linalg.hpp"

namespace mnewton {
namespace {

constexpr std::size_t kMaxWitnesses = 16;

double hadamard_bound(const Matrix& a, const IndexSet& alpha) {
  double bound = 1.0;
  for (int i : alpha.elements()) {
    double ss = 0.0;
    for (int j : alpha.elements()) {
      const double v = a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      ss += v * v;
    }
    bound *= std::sqrt(ss);
  }
  return bound;
}

IndexSet leading_set(std::size_t n, std::size_t k) {
  std::vector<int> e(k);
  for (std::size_t i = 0; i < k; ++i) e[i] = static_cast<int>(i + 1);
  return IndexSet(n, std::move(e));
}

// Z test, leading minors and the M verdict; no inverse-M probing.
MatrixClassReport classify_m(const Matrix& a, double tol) {
  MatrixClassReport rep;
  const std::size_t n = a.order();
  const double maxabs = a.max_abs();
  const double z_bound = tol * std::max(1.0, maxabs);

  rep.is_z = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && a(i, j) > z_bound) {
        rep.is_z = false;
        rep.z_violations.push_back({i + 1, j + 1, a(i, j)});
      }
    }
  }

  bool leading_ok = true;
  rep.leading_minors.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const IndexSet alpha = leading_set(n, k);
    const double minor = principal_minor(a, alpha);
    rep.leading_minors.push_back(minor);
    if (!(relative_minor(a, alpha) > tol)) {
      leading_ok = false;
      if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back({alpha, minor});
    }
  }

  if (n <= kPTestCap) {
    bool all_positive = true;
    for (std::size_t m = 1; m <= n; ++m) {
      for (auto mask : subset_masks(n, m)) {
        const IndexSet alpha = IndexSet::from_mask(n, mask);
        if (!(relative_minor(a, alpha) > tol)) {
          all_positive = false;
          const bool leading = mask == ((std::uint64_t{1} << m) - 1);
          if (!leading && rep.witnesses.size() < kMaxWitnesses) {
            rep.witnesses.push_back({alpha, principal_minor(a, alpha)});
          }
        }
      }
    }
    rep.is_p = all_positive;
  }

  if (rep.is_z && leading_ok) {
    rep.m_class = MClass::m_nonsingular;
  } else if (rep.is_z) {
    const double base = maxabs > 0.0 ? maxabs : 1.0;
    bool closure = true;
    for (double eps : {1e-8, 1e-6, 1e-4}) {
      const Matrix shifted = a + Matrix::identity(n) * (eps * base);
      for (std::size_t k = 1; k <= n && closure; ++k) {
        if (!(principal_minor(shifted, leading_set(n, k)) > 0.0)) closure = false;
      }
    }
    rep.m_class = closure ? MClass::m_singular : MClass::not_m;
  }
  return rep;
}

class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  // 53 random bits scaled to [0, 1).
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

Matrix random_nonnegative(std::size_t n, UniformStream& rng) {
  Matrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = rng.next();
  return b;
}

Matrix generate_m(std::size_t n, double margin, UniformStream& rng) {
  const Matrix b = random_nonnegative(n, rng);
  double max_row = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double v : b.row(i)) s += v;
    max_row = std::max(max_row, s);
  }
  const double s = (1.0 + margin) * max_row;
  return Matrix::identity(n) * s - b;
}

}  // namespace

std::string_view to_string(MClass c) {
  switch (c) {
    case MClass::m_nonsingular:
      return "M-nonsingular";
    case MClass::m_singular:
      return "M-singular";
    case MClass::not_m:
      return "not-M";
  }
  return "unknown";
}

double relative_minor(const Matrix& a, const IndexSet& alpha) {
  if (alpha.empty()) return 1.0;
  const double bound = hadamard_bound(a, alpha);
  if (bound == 0.0) return 0.0;
  return principal_minor(a, alpha) / bound;
}

MatrixClassReport classify(const Matrix& a, double tol) {
  MatrixClassReport rep = classify_m(a, tol);
  const std::size_t n = a.order();
  if (n == 0) return rep;
  if (relative_minor(a, IndexSet::full(n)) > tol) {
    try {
      const Matrix inv = inverse(a);
      const MClass c = classify_m(inv, tol).m_class;
      rep.is_inverse_m = c != MClass::not_m;
    } catch (const InputError&) {
      rep.is_inverse_m = false;
    }
  }
  return rep;
}

std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::m:
      return "M";
    case GeneratorKind::inverse_m:
      return "inverse-M";
    case GeneratorKind::singular_m:
      return "singular-M";
    case GeneratorKind::similarity_conjugated_m:
      return "similarity-conjugated-M";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view s) {
  for (auto k : {GeneratorKind::m, GeneratorKind::inverse_m, GeneratorKind::singular_m,
                 GeneratorKind::similarity_conjugated_m}) {
    if (s == to_string(k)) return k;
  }
  throw InputError("unknown generator kind '" + std::string(s) +
                   "' (expected M, inverse-M, singular-M or similarity-conjugated-M)");
}

PerronBracket perron_root(const Matrix& b, double rel_tol, std::size_t max_iterations) {
  const std::size_t n = b.order();
  if (n == 0) throw InputError("Perron root of an empty matrix");
  // Iterate on B + sigma I: same Perron vector, and the shift makes an
  // irreducible but periodic B primitive.
  double sigma = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (double x : b.row(i)) row += x;
    sigma = std::max(sigma, row);
  }
  sigma *= 0.5;
  std::vector<double> v(n, 1.0);
  std::vector<double> w(n);
  const auto& k = kernels::active();
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    k.gemv(b.data().data(), n, n, v.data(), w.data());
    for (std::size_t i = 0; i < n; ++i) w[i] += sigma * v[i];
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool defined = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] <= 0.0) {
        defined = false;
        break;
      }
      const double r = w[i] / v[i] - sigma;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    double norm = 0.0;
    for (double x : w) norm = std::max(norm, x);
    if (norm == 0.0) return {0.0, 0.0, it};
    if (defined && hi - lo <= rel_tol * hi) return {std::max(lo, 0.0), hi, it};
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  throw ConstructionError("power iteration did not converge in " +
                          std::to_string(max_iterations) + " steps");
}

Matrix generate(const GeneratorSpec& spec) {
  if (spec.n == 0) throw InputError("generator order n must be >= 1");
  if (!(spec.margin > 0.0)) throw InputError("generator margin must be > 0");
  UniformStream rng(spec.seed);
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case GeneratorKind::m:
      return generate_m(n, spec.margin, rng);
    case GeneratorKind::inverse_m:
      return inverse(generate_m(n, spec.margin, rng));
    case GeneratorKind::singular_m: {
      const Matrix b = random_nonnegative(n, rng);
      const PerronBracket rho = perron_root(b);
      return Matrix::identity(n) * rho.upper - b;
    }
    case GeneratorKind::similarity_conjugated_m: {
      const Matrix m = generate_m(n, spec.margin, rng);
      Matrix r(n);
      double fro = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          r(i, j) = 2.0 * rng.next() - 1.0;
          fro += r(i, j) * r(i, j);
        }
      }
      fro = std::sqrt(fro);
      const Matrix t = fro > 0.0 ? Matrix::identity(n) + r * (0.9 / fro) : Matrix::identity(n);
      return t * m * inverse(t);
    }
  }
  throw InputError("unknown generator kind");
}

double dual_minor_identity_deviation(const Matrix& a) {
  const std::size_t n = a.order();
  if (n == 0) throw InputError("dual minor identity needs order >= 1");
  if (n > 10) throw InputError("dual minor identity check is limited to n <= 10");
  const double det = determinant(a);
  if (det == 0.0 || std::abs(relative_minor(a, IndexSet::full(n))) <= 1e-14) {
    throw InputError("dual minor identity needs a nonsingular matrix");
  }
  const Matrix inv = inverse(a);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  double worst = 0.0;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    const IndexSet alpha = IndexSet::from_mask(n, mask);
    const double lhs = principal_minor(inv, alpha);
    const double rhs = principal_minor(a, IndexSet::from_mask(n, all & ~mask)) / det;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), hadamard_bound(inv, alpha)});
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

bool dual_minor_identity_check(const Matrix& a, double tol) {
  return dual_minor_identity_deviation(a) <= tol;
}

}  // namespace mnewton
