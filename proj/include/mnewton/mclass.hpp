#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mnewton/matrix.hpp"

namespace mnewton {

/// Exhaustive P-matrix test runs only up to this order (2^n minors).
inline constexpr std::size_t kPTestCap = 12;

enum class MClass { m_nonsingular, m_singular, not_m };

std::string_view to_string(MClass c);

struct MinorWitness {
  IndexSet alpha;
  double value;
};

struct OffDiagonalWitness {
  std::size_t row;  // 1-based
  std::size_t col;  // 1-based
  double value;
};

struct MatrixClassReport {
  bool is_z = false;
  /// Empty when the order exceeds kPTestCap.
  std::optional<bool> is_p;
  MClass m_class = MClass::not_m;
  bool is_inverse_m = false;
  /// A[{1..k}] for k = 1..n.
  std::vector<double> leading_minors;
  /// Principal minors that violate a sign condition (capped at 16 entries).
  std::vector<MinorWitness> witnesses;
  std::vector<OffDiagonalWitness> z_violations;
};

/// Minor divided by its Hadamard bound prod_i ||row i of A(alpha)||_2, so the
/// value lies in [-1, 1]. Zero rows give 0.
double relative_minor(const Matrix& a, const IndexSet& alpha);

/// Classification with tolerance semantics:
///  - Z: every off-diagonal entry <= tol * max(1, max|A|).
///  - M-nonsingular: Z and every leading principal minor has relative size
///    (see relative_minor) > tol.
///  - M-singular: Z, not M-nonsingular, and A + eps I has all leading minors
///    positive for eps in {1e-8, 1e-6, 1e-4} * max|A|.
///  - inverse-M: A nonsingular and A^-1 is an M-matrix.
/// The exhaustive P test is reported for n <= kPTestCap.
MatrixClassReport classify(const Matrix& a, double tol = 1e-9);

enum class GeneratorKind { m, inverse_m, singular_m, similarity_conjugated_m };

std::string_view to_string(GeneratorKind k);
/// Accepts "M", "inverse-M", "singular-M", "similarity-conjugated-M".
GeneratorKind parse_generator_kind(std::string_view s);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::m;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  double margin = 0.1;
};

/// Seeded random member of the requested class. Same spec, same matrix.
///  - m: sI - B with B uniform on [0,1] and s = (1 + margin) max row sum of B.
///  - inverse_m: inverse of the m-kind matrix for the same seed.
///  - singular_m: rho I - B with rho the Perron root of B from power
///    iteration, taken as the Collatz-Wielandt upper bound once the bracket
///    is within 1e-10 relative.
///  - similarity_conjugated_m: T M T^-1 with T = I + 0.9 R/||R||_F (so
///    cond(T) <= 19) and R uniform on [-1,1].
/// Throws InputError for n = 0 or margin <= 0, ConstructionError when power
/// iteration fails to converge in 1e5 steps.
Matrix generate(const GeneratorSpec& spec);

/// Perron root bracket of a nonnegative matrix by power iteration on
/// B + sigma I, sigma = half the largest row sum.
struct PerronBracket {
  double lower;
  double upper;
  std::size_t iterations;
};
PerronBracket perron_root(const Matrix& b, double rel_tol = 1e-10,
                          std::size_t max_iterations = 100000);

/// max over alpha of |A^-1[alpha] - A[alpha']/det A|, each term scaled by
/// max(|lhs|, |rhs|, Hadamard bound of A^-1(alpha)). Requires n <= 10 and
/// a nonsingular A (InputError otherwise).
double dual_minor_identity_deviation(const Matrix& a);

/// dual_minor_identity_deviation(a) <= tol.
bool dual_minor_identity_check(const Matrix& a, double tol);

}  // namespace mnewton
