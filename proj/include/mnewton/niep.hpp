#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mnewton/sfunc.hpp"
#include "mnewton/spectrum.hpp"

namespace mnewton {

// Necessary conditions for a tuple to be the spectrum of an entrywise
// nonnegative matrix:
//   moments       s_k >= 0 for k = 1..K
//   jll           s_k^m <= n^(m-1) s_{km} for k >= 1, m >= 2, k m <= bound
//   newton_shift  (lambda_1 - lambda_i)_i satisfies Newton's inequalities,
//                 lambda_1 the Perron candidate (max modulus, real, >= 0)
//   laffey_meehan (n-1) s_4 >= s_2^2, applicable when s_1 = 0
// where s_k = sum_i lambda_i^k.

enum class Status { pass, fail, not_applicable };

std::string_view to_string(Status s);

struct ConditionResult {
  Status status = Status::pass;
  double margin = 0.0;
  /// Index (k), pair (k, m) or Newton index (j) that produced the margin.
  std::optional<std::size_t> k;
  std::optional<std::size_t> m;
  std::optional<std::size_t> j;
  std::string note;
};

struct ScreeningParams {
  std::size_t moment_k = 20;
  std::size_t jll_bound = 30;
  double tol = 1e-9;
};

struct ScreeningReport {
  ScreeningParams params;
  ConditionResult moments;
  ConditionResult jll;
  ConditionResult newton_shift;
  ConditionResult laffey_meehan;

  /// No condition reports fail.
  bool passes() const;
};

/// s_1..s_K. Throws InputError when K = 0 or the tuple is not closed under
/// conjugation within tol * scale.
std::vector<double> moments(const Spectrum& s, std::size_t max_k, double tol = 1e-9);

/// pass iff s_k >= -tol * sum_i |lambda_i|^k for all k <= K; margin is
/// min_k s_k and k its position.
ConditionResult moment_condition(const Spectrum& s, std::size_t max_k, double tol = 1e-9);

/// Slack of each (k, m) is (n^(m-1) s_{km} - s_k^m) / scale with
/// scale = max(|s_k|^m, n^(m-1) |s_{km}|) + n^(m-1) 1e-12 sum_i |lambda_i|^(km);
/// pass iff every slack >= -tol. margin is the most negative slack.
/// Requires bound >= 2.
ConditionResult jll_condition(const Spectrum& s, std::size_t bound, double tol = 1e-9);

/// Not applicable when no maximum-modulus element is real and nonnegative.
/// margin is the smallest Newton margin of the shifted tuple, j its index.
ConditionResult newton_shift_condition(const Spectrum& s, double tol = 1e-9);

/// Applicable iff |s_1| <= tol * max(1, sum_i |lambda_i|). margin is
/// (n-1) s_4 - s_2^2; pass iff margin >= -tol * max((n-1)|s_4|, s_2^2).
ConditionResult laffey_meehan_condition(const Spectrum& s, double tol = 1e-9);

/// (n-1) s_4 - s_2^2 of an integer tuple, in exact integer arithmetic.
BigInt laffey_meehan_margin_exact(std::span<const std::int64_t> values);

ScreeningReport screen(const Spectrum& s, const ScreeningParams& params = {});

/// Perturbed ten-tuple (3+t1, 1+t2, 1,1,1,1, -2+t3, -2,-2,-2) with
/// t1 = -eps, t2 = 13 eps and t3 solved by Newton iteration so that
/// (3+t1)^3 + (1+t2)^3 + (-2+t3)^3 = 20. Its first moment is positive, its
/// third is zero. Requires 0 < eps <= 1e-2; throws ConstructionError when the
/// root finder does not reach a residual of 1e-13 within 100 iterations.
Spectrum construct_perturbed(double eps);

/// Tuples that separate the conditions from one another.
namespace witness_tuples {

/// (1, -1, -1): moments fail, Newton shift passes.
Spectrum moments_fail_newton_pass();
/// (sqrt 2, i, -i): moments pass, Newton shift fails.
Spectrum moments_pass_newton_fail();
/// (3, 1, 1, 1, 1, 1, -2, -2, -2, -2): s_1 = s_3 = 0; perturbed by
/// construct_perturbed to break JLL.
Spectrum unperturbed_ten_tuple();
/// x^6 - 6x^5 + 14x^4 - 20x^3, i.e. (x-1)^6 truncated with 15 lowered to 14.
RealPoly truncated_binomial_poly();
/// (a, a, a, 0, a - z, a - conj z) where a and z, conj z are the nonzero
/// roots of truncated_binomial_poly: moments and JLL pass, Newton shift fails.
Spectrum moments_jll_pass_newton_fail();
/// (3, 3, -2, -2, -2): moments, JLL and Newton shift pass; Laffey-Meehan fails.
Spectrum laffey_meehan_fail();

}  // namespace witness_tuples

}  // namespace mnewton
