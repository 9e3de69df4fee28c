// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mnewton/charcoeff.hpp"
#include "mnewton/forms.hpp"
#include "mnewton/kernels.hpp"
#include "mnewton/linalg.hpp"
#include "mnewton/mclass.hpp"
#include "mnewton/niep.hpp"
#include "mnewton/sfunc.hpp"
#include "support.hpp"

using namespace mnewton;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::uint64_t brute_count(std::size_t n, std::size_t m1, std::size_t m2, std::size_t k) {
  std::uint64_t count = 0;
  const std::uint64_t lim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < lim; ++x) {
    if (static_cast<std::size_t>(std::popcount(x)) != m1) continue;
    for (std::uint64_t y = 0; y < lim; ++y)
      if (static_cast<std::size_t>(std::popcount(y)) == m2 &&
          static_cast<std::size_t>(std::popcount(x & y)) == k)
        ++count;
  }
  return count;
}

Outcome psi_psd() {
  Outcome o;
  double worst_eig = 0.0, worst_null = 0.0;
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      const auto f = build_form(n, m, FormKind::psi);
      const auto r = psd_check(f, 1e-8);
      const double scale = f.max_abs();
      const auto s = structure_checks(n, m, 1e-8);
      worst_eig = std::min(worst_eig, r.min_eigenvalue / scale);
      worst_null = std::max(worst_null, s.null_vector_residual / scale);
      if (!r.psd || r.min_eigenvalue < -1e-8 * scale) o.ok = false;
      if (s.null_vector_residual > 1e-8 * scale) o.ok = false;
    }
  o.detail = fmt("min eig/maxabs %.2e", worst_eig) + fmt(", |psi e|/maxabs %.2e", worst_null);
  return o;
}

Outcome binomial_identity() {
  Outcome o;
  int cells = 0;
  for (std::size_t n = 2; n <= 40; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      ++cells;
      if (binomial_identity_sum(n, m) != 0) {
        o.ok = false;
        o.detail = "nonzero at n=" + std::to_string(n) + " m=" + std::to_string(m);
        return o;
      }
    }
  o.detail = std::to_string(cells) + " cells exactly zero";
  return o;
}

Outcome newton_on_m_classes() {
  Outcome o;
  int failures = 0;
  double worst = INFINITY;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 2 + seed % 7;
    for (auto kind : {GeneratorKind::m, GeneratorKind::inverse_m}) {
      const auto r = newton_check(normalized_coeffs(generate({kind, n, seed, 0.1})), 1e-9);
      if (!r.holds) ++failures;
      if (r.worst_j) worst = std::min(worst, r.margins[*r.worst_j - 1]);
    }
  }
  o.ok = failures == 0;
  o.detail = "2000 matrices, " + std::to_string(failures) + " violations" +
             fmt(", smallest margin %.3e", worst);
  return o;
}

Outcome pair_sum_inequalities() {
  Outcome o;
  int checks = 0, failures = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 7;
    for (auto kind : {GeneratorKind::m, GeneratorKind::inverse_m}) {
      const MinorTable t(generate({kind, n, seed + 5000, 0.1}));
      for (const auto& e : genimm_sweep(t, 1e-9)) {
        ++checks;
        if (!e.genimm.holds) ++failures;
      }
      for (std::size_t m = 1; m < n; ++m)
        for (std::size_t j = 0; j <= m; ++j) {
          ++checks;
          if (!pointwise_check(t, m, j, 1e-9).holds) ++failures;
        }
    }
  }
  o.ok = failures == 0;
  o.detail = std::to_string(checks) + " checks on 400 matrices, " + std::to_string(failures) +
             " violations";
  return o;
}

Outcome expansion() {
  Outcome o;
  std::mt19937_64 rng(1005);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 6;
    const Matrix a = testsupport::random_matrix(rng, n);
    for (std::size_t m = 1; m < n; ++m) {
      const auto r = expansion_identity_report(a, m, 1e-9);
      worst = std::max({worst, r.same_size_error, r.mixed_size_error});
      if (!r.holds) o.ok = false;
    }
  }
  o.detail = fmt("worst relative error %.2e", worst);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(1006);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 7;
    const Matrix a = testsupport::random_matrix(rng, n);
    const auto fast = minor_sums(a, MinorSumMethod::trace_recursion);
    std::vector<double> slow(n + 1, 0.0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      slow[static_cast<std::size_t>(std::popcount(mask))] += testsupport::cofactor_minor(a, mask);
    for (std::size_t j = 0; j <= n; ++j) {
      const double err = std::abs(fast[j] - slow[j]) / std::abs(slow[j]);
      worst = std::max(worst, err);
      if (!(err <= 1e-8)) o.ok = false;
    }
  }
  int cells = 0;
  for (std::size_t n = 0; n <= 10; ++n)
    for (std::size_t m1 = 0; m1 <= n; ++m1)
      for (std::size_t m2 = 0; m2 <= n; ++m2)
        for (std::size_t k = 0; k <= std::min(m1, m2); ++k) {
          const SParams p{m1, m2, k, n};
          if (!p.feasible()) continue;
          ++cells;
          if (s_identity(p) != BigInt(brute_count(n, m1, m2, k))) o.ok = false;
        }
  o.detail = fmt("minor sums worst relative error %.2e", worst) + ", " + std::to_string(cells) +
             " identity counts";
  return o;
}

Outcome regressions() {
  Outcome o;
  const double r2 = std::sqrt(2.0);
  const auto a = newton_check(coeffs_from_spectrum(Spectrum{{{0, 0}, {r2, -1}, {r2, 1}}}));
  const double m1 = a.margins.at(0);
  const auto six = newton_shift_condition(witness_tuples::moments_jll_pass_newton_fail());
  const std::vector<std::int64_t> five{3, 3, -2, -2, -2};
  const BigInt lm = laffey_meehan_margin_exact(five);
  const auto roots = poly_roots(witness_tuples::truncated_binomial_poly());
  bool roots_ok = roots.size() == 6 && std::abs(roots.values[0] - Complex(3.6702, 0)) <= 5e-4 &&
                  std::abs(roots.values[1] - Complex(1.1649, 2.0229)) <= 5e-4 &&
                  std::abs(roots.values[2] - Complex(1.1649, -2.0229)) <= 5e-4;
  o.ok = std::abs(m1 + 1.0 / 9.0) <= 1e-12 && six.j == std::size_t{2} &&
         std::abs(six.margin + 29.0 / 225.0) <= 1e-9 && lm == -60 && roots_ok;
  o.detail = fmt("j=1 margin %+.15f", m1) + fmt(", j=2 margin %+.12f", six.margin) +
             ", LM " + lm.str() + (roots_ok ? ", roots match" : ", roots off");
  return o;
}

Outcome perturbed() {
  Outcome o;
  const Spectrum s = construct_perturbed(1e-3);
  const auto mom = moments(s, 20);
  bool others = true;
  for (std::size_t k = 2; k <= 20; ++k)
    if (k != 3 && !(mom[k - 1] >= 0.0)) others = false;
  const auto jll = jll_condition(s, 30);
  const auto ns = newton_shift_condition(s);
  o.ok = mom[0] > 0.0 && std::abs(mom[2]) <= 1e-12 && others && jll.status == Status::fail &&
         jll.k == std::size_t{1} && jll.m == std::size_t{3} && ns.status == Status::pass;
  o.detail = fmt("s1 %.6e", mom[0]) + fmt(", s3 %.1e", mom[2]) +
             ", jll worst (" + std::to_string(jll.k.value_or(0)) + "," +
             std::to_string(jll.m.value_or(0)) + "), newton_shift " +
             std::string(to_string(ns.status));
  return o;
}

Outcome independence() {
  Outcome o;
  const auto a = screen(Spectrum::real({1, -1, -1}));
  const auto b = screen(witness_tuples::moments_pass_newton_fail());
  const auto c = screen(construct_perturbed(1e-3));
  const auto d = screen(witness_tuples::moments_jll_pass_newton_fail());
  const auto e = screen(witness_tuples::laffey_meehan_fail());
  const bool pa = a.moments.status == Status::fail && a.newton_shift.status == Status::pass;
  const bool pb = b.moments.status == Status::pass && b.newton_shift.status == Status::fail;
  const bool pc = c.moments.status == Status::pass && c.newton_shift.status == Status::pass &&
                  c.jll.status == Status::fail;
  const bool pd = d.moments.status == Status::pass && d.jll.status == Status::pass &&
                  d.newton_shift.status == Status::fail;
  const bool pe = e.moments.status == Status::pass && e.jll.status == Status::pass &&
                  e.newton_shift.status == Status::pass && e.laffey_meehan.status == Status::fail;
  o.ok = pa && pb && pc && pd && pe;
  o.detail = std::string("patterns ") + (pa ? "1" : "-") + (pb ? "2" : "-") + (pc ? "3" : "-") +
             (pd ? "4" : "-") + (pe ? "5" : "-");
  return o;
}

Outcome duality_averaging() {
  Outcome o;
  double worst = 0.0;
  int checks = 0;
  auto track = [&](double got, double want) {
    ++checks;
    const double err = std::abs(got - want) / std::abs(want);
    worst = std::max(worst, err);
    if (!(err <= 1e-7)) o.ok = false;
  };
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const Matrix a = generate({GeneratorKind::m, n, seed + 9000, 0.1});
    const Matrix ai = inverse(a);
    const double det2 = determinant(a) * determinant(a);
    const MinorTable ta(a), ti(ai);
    for (std::size_t m = 1; m < n; ++m)
      for (std::size_t k = 0; k < m; ++k) {
        if (2 * m - k == n) {
          track(s_value(ta, {m, m, k, n}) / det2, s_value(ti, {n - m, n - m, 0, n}));
          track(s_value(ta, {m + 1, m - 1, k, n}) / det2,
                s_value(ti, {n - m + 1, n - m - 1, 0, n}));
        } else if (2 * m - k < n) {
          for (const SParams p : {SParams{m, m, k, n}, SParams{m + 1, m - 1, k, n}})
            track(submatrix_average_normalized_s(a, p), normalized_s(ta, p));
        }
      }
  }
  o.detail = std::to_string(checks) + fmt(" identities, worst relative error %.2e", worst);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "psi forms are PSD with null vector e (n <= 10)", 60.0, psi_psd},
      {2, "binomial identity sums vanish exactly (n <= 40)", 5.0, binomial_identity},
      {3, "Newton's inequalities on 1000 M + 1000 inverse-M matrices", 30.0, newton_on_m_classes},
      {4, "generalized and pointwise inequalities on 200 + 200 matrices", 120.0, pair_sum_inequalities},
      {5, "expansion identities on 100 random matrices", 60.0, expansion},
      {6, "trace recursion vs enumeration; identity counts vs brute force", 60.0,
       oracle_equivalence},
      {7, "counterexample margins and polynomial roots", 5.0, regressions},
      {8, "perturbed ten-tuple profile (eps = 1e-3)", 1.0, perturbed},
      {9, "independence patterns of the screening conditions", 5.0, independence},
      {10, "duality and averaging identities on 50 M-matrices", 60.0, duality_averaging},
  };
  std::printf("kernels: %s\n", std::string(kernels::isa_name(kernels::active().isa)).c_str());
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d  %-64s %7.3fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.c_str(), in_time ? "" : " (over time budget)");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
