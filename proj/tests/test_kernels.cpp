#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mnewton/error.hpp"
#include "mnewton/kernels.hpp"
#include "support.hpp"

using namespace mnewton;
namespace k = mnewton::kernels;

namespace {

std::vector<double> randv(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = testsupport::uniform(rng, -1.0, 1.0);
  return v;
}

// Plain triple loop, independent of both kernel tables.
std::vector<double> naive_gemm(const std::vector<double>& a, const std::vector<double>& b,
                               std::size_t n, std::size_t kk, std::size_t m) {
  std::vector<double> c(n * m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      long double s = 0.0L;
      for (std::size_t p = 0; p < kk; ++p) s += static_cast<long double>(a[i * kk + p]) * b[p * m + j];
      c[i * m + j] = static_cast<double>(s);
    }
  return c;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar table is always available") {
  CHECK(k::isa_available(k::Isa::scalar));
  CHECK(k::table_for(k::Isa::scalar).isa == k::Isa::scalar);
  CHECK(k::isa_name(k::Isa::scalar) == "scalar");
  CHECK(k::isa_name(k::Isa::avx2) == "avx2");
}

TEST_CASE("scalar kernels against long double reference") {
  std::mt19937_64 rng(11);
  const auto& t = k::table_for(k::Isa::scalar);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 129u}) {
    const auto a = randv(rng, n);
    const auto b = randv(rng, n);
    long double ref = 0.0L;
    for (std::size_t i = 0; i < n; ++i) ref += static_cast<long double>(a[i]) * b[i];
    CHECK(std::abs(t.dot(a.data(), b.data(), n) - static_cast<double>(ref)) <= 1e-14 * (n + 1));
  }
}

TEST_CASE("avx2 kernels match scalar kernels") {
  if (!k::isa_available(k::Isa::avx2)) {
    CHECK_THROWS_AS(k::table_for(k::Isa::avx2), InputError);
    return;
  }
  const auto& s = k::table_for(k::Isa::scalar);
  const auto& v = k::table_for(k::Isa::avx2);
  std::mt19937_64 rng(12);
  for (std::size_t n = 0; n <= 70; ++n) {
    const auto a = randv(rng, n);
    const auto b = randv(rng, n);
    CHECK(std::abs(s.dot(a.data(), b.data(), n) - v.dot(a.data(), b.data(), n)) <=
          1e-14 * static_cast<double>(n + 1));

    auto y1 = randv(rng, n);
    auto y2 = y1;
    s.axpy(-0.37, a.data(), y1.data(), n);
    v.axpy(-0.37, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-15);
  }
  for (std::size_t rows : {1u, 2u, 5u, 13u}) {
    for (std::size_t cols : {1u, 3u, 4u, 9u, 17u}) {
      const auto a = randv(rng, rows * cols);
      const auto x = randv(rng, cols);
      std::vector<double> y1(rows), y2(rows);
      s.gemv(a.data(), rows, cols, x.data(), y1.data());
      v.gemv(a.data(), rows, cols, x.data(), y2.data());
      for (std::size_t i = 0; i < rows; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-13);
    }
  }
  for (std::size_t n : {1u, 2u, 5u, 8u, 11u}) {
    for (std::size_t kk : {1u, 4u, 7u}) {
      for (std::size_t m : {1u, 3u, 4u, 6u, 13u}) {
        const auto a = randv(rng, n * kk);
        const auto b = randv(rng, kk * m);
        std::vector<double> c1(n * m, 9.0), c2(n * m, -9.0);
        s.gemm(a.data(), b.data(), c1.data(), n, kk, m);
        v.gemm(a.data(), b.data(), c2.data(), n, kk, m);
        const auto ref = naive_gemm(a, b, n, kk, m);
        for (std::size_t i = 0; i < n * m; ++i) {
          CHECK(std::abs(c1[i] - ref[i]) <= 1e-14 * kk);
          CHECK(std::abs(c2[i] - ref[i]) <= 1e-14 * kk);
        }
      }
    }
  }
}

TEST_CASE("repeated calls are bitwise reproducible") {
  std::mt19937_64 rng(13);
  const auto a = randv(rng, 257);
  const auto b = randv(rng, 257);
  const double first = k::dot(a, b);
  for (int i = 0; i < 10; ++i) CHECK(k::dot(a, b) == first);
}

TEST_CASE("span wrappers validate sizes") {
  std::vector<double> a(4), b(3), c(4);
  CHECK_THROWS_AS(k::dot(a, b), InputError);
  CHECK_THROWS_AS(k::axpy(1.0, a, b), InputError);
  CHECK_THROWS_AS(k::gemv(a, 2, 2, b, c), InputError);
  CHECK_THROWS_AS(k::gemm(a, a, b, 2, 2, 2), InputError);
}

}
