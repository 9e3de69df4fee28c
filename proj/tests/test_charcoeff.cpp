#include <doctest.h>

#include <cmath>
#include <random>

#include "mnewton/charcoeff.hpp"
#include "mnewton/error.hpp"
#include "mnewton/mclass.hpp"
#include "support.hpp"

using namespace mnewton;

TEST_SUITE("charcoeff") {

TEST_CASE("normalized coefficients of small matrices") {
  const auto id = normalized_coeffs(Matrix::identity(7));
  for (double c : id.c) CHECK(c == doctest::Approx(1.0));
  const auto d = normalized_coeffs(Matrix::diagonal(std::vector<double>{1, 2, 3}));
  CHECK(d.c[0] == 1.0);
  CHECK(d.c[1] == doctest::Approx(2.0));
  CHECK(d.c[2] == doctest::Approx(11.0 / 3.0));
  CHECK(d.c[3] == doctest::Approx(6.0));
  const auto t = normalized_coeffs(Matrix::from_rows({{2, -1}, {-1, 2}}));
  CHECK(t.c[1] == doctest::Approx(2.0));
  CHECK(t.c[2] == doctest::Approx(3.0));
}

TEST_CASE("coefficients from spectra") {
  const auto a = coeffs_from_spectrum(Spectrum::real({0, 2, 2}));
  CHECK(a.c[1] == doctest::Approx(4.0 / 3.0));
  CHECK(a.c[2] == doctest::Approx(4.0 / 3.0));
  CHECK(a.c[3] == 0.0);
  const double r2 = std::sqrt(2.0);
  const auto b = coeffs_from_spectrum(Spectrum{{{0, 0}, {r2, -1}, {r2, 1}}});
  CHECK(b.c[1] == doctest::Approx(2 * r2 / 3));
  CHECK(b.c[2] == doctest::Approx(1.0));
  CHECK(std::abs(b.c[3]) <= 1e-15);
  const auto ones = coeffs_from_spectrum(Spectrum::real(std::vector<double>(9, 1.0)));
  for (double c : ones.c) CHECK(c == doctest::Approx(1.0));

  CHECK_THROWS_AS(coeffs_from_spectrum(Spectrum{}), InputError);
  CHECK_THROWS_AS(coeffs_from_spectrum(Spectrum{{{1, 1}, {1, 0.5}}}), InputError);
}

TEST_CASE("Newton checks") {
  const auto a = newton_check(coeffs_from_spectrum(Spectrum::real({0, 2, 2})));
  CHECK(a.holds);
  CHECK(a.margins[0] == doctest::Approx(4.0 / 9.0));
  CHECK(a.margins[1] == doctest::Approx(16.0 / 9.0));

  const double r2 = std::sqrt(2.0);
  const auto b = newton_check(coeffs_from_spectrum(Spectrum{{{0, 0}, {r2, -1}, {r2, 1}}}));
  CHECK_FALSE(b.holds);
  REQUIRE(b.worst_j.has_value());
  CHECK(*b.worst_j == 1);
  CHECK(std::abs(b.margins[0] + 1.0 / 9.0) <= 1e-12);

  const auto c = newton_check(normalized_coeffs(Matrix::identity(5)));
  CHECK(c.holds);
  for (double m : c.margins) CHECK(std::abs(m) <= 1e-14);

  const auto single = newton_check(coeffs_from_spectrum(Spectrum::real({4})));
  CHECK(single.holds);
  CHECK(single.margins.empty());
  CHECK_FALSE(single.worst_j.has_value());
}

TEST_CASE("M-matrices and inverse M-matrices satisfy Newton's inequalities") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 7;
    for (auto kind : {GeneratorKind::m, GeneratorKind::inverse_m, GeneratorKind::singular_m,
                      GeneratorKind::similarity_conjugated_m}) {
      const auto r = newton_check(normalized_coeffs(generate({kind, n, seed, 0.1})), 1e-9);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("coefficients are similarity invariant") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto a = normalized_coeffs(generate({GeneratorKind::m, n, seed, 0.1}));
    const auto b =
        normalized_coeffs(generate({GeneratorKind::similarity_conjugated_m, n, seed, 0.1}));
    for (std::size_t j = 0; j <= n; ++j)
      CHECK(testsupport::rel_err(b.c[j], a.c[j], std::abs(a.c[j])) <= 1e-6);
  }
}

TEST_CASE("matrix and spectrum routes agree on diagonal matrices") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 10;
    std::vector<double> d(n);
    for (auto& x : d) x = testsupport::uniform(rng, 0.1, 3.0);
    const auto a = normalized_coeffs(Matrix::diagonal(d));
    const auto b = coeffs_from_spectrum(Spectrum::real(d));
    for (std::size_t j = 0; j <= n; ++j)
      CHECK(testsupport::rel_err(a.c[j], b.c[j], std::abs(b.c[j])) <= 1e-12);
  }
}

TEST_CASE("real spectra satisfy Newton's inequalities") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 8;
    CHECK(newton_check(normalized_coeffs(testsupport::random_symmetric(rng, n))).holds);
    std::vector<double> d(n);
    for (auto& x : d) x = testsupport::uniform(rng, -5.0, 5.0);
    CHECK(newton_check(coeffs_from_spectrum(Spectrum::real(d))).holds);
  }
}

TEST_CASE("first Newton inequality has the sign of n s_2 - s_1^2") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 8;
    // real spectra with some imaginary pairs so both signs occur
    Spectrum s;
    while (s.size() + 2 <= n && testsupport::uniform(rng, 0, 1) < 0.5) {
      const double re = testsupport::uniform(rng, -2, 2);
      const double im = testsupport::uniform(rng, 0.1, 3);
      s.values.push_back({re, im});
      s.values.push_back({re, -im});
    }
    while (s.size() < n) s.values.push_back({testsupport::uniform(rng, -2, 2), 0.0});
    const auto r = newton_check(coeffs_from_spectrum(s));
    double s1 = 0.0, s2 = 0.0;
    for (const auto& z : s.values) {
      s1 += z.real();
      s2 += (z * z).real();
    }
    const double jll = static_cast<double>(n) * s2 - s1 * s1;
    // n^2 (n-1) mu_1 = n s_2 - s_1^2
    const double nn = static_cast<double>(n);
    CHECK(r.margins[0] * nn * nn * (nn - 1.0) == doctest::Approx(jll).epsilon(1e-9).scale(1.0));
    CHECK((r.margins[0] >= 0.0) == (jll >= 0.0));
  }
}

}
