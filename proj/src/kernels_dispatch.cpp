#include <cstdlib>
#include <string>

#include "mnewton/error.hpp"
#include "mnewton/kernels.hpp"

namespace mnewton::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(MNEWTON_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select_table() {
  if (const char* env = std::getenv("MNEWTON_SIMD"); env != nullptr) {
    if (std::string(env) == "scalar") return detail::scalar_table;
  }
  if (isa_available(Isa::avx2)) return table_for(Isa::avx2);
  return detail::scalar_table;
}

void check_size(bool ok, const char* what) {
  if (!ok) throw InputError(std::string("kernel size mismatch: ") + what);
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& table_for(Isa isa) {
  if (!isa_available(isa)) {
    throw InputError("kernel ISA not available: " + std::string(isa_name(isa)));
  }
#ifdef MNEWTON_HAVE_AVX2_KERNELS
  if (isa == Isa::avx2) return detail::avx2_table;
#endif
  return detail::scalar_table;
}

const KernelTable& active() {
  static const KernelTable& table = select_table();
  return table;
}

double dot(std::span<const double> a, std::span<const double> b) {
  check_size(a.size() == b.size(), "dot");
  return active().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  check_size(x.size() == y.size(), "axpy");
  active().axpy(alpha, x.data(), y.data(), x.size());
}

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y) {
  check_size(a.size() == rows * cols && x.size() == cols && y.size() == rows, "gemv");
  active().gemv(a.data(), rows, cols, x.data(), y.data());
}

void gemm(std::span<const double> a, std::span<const double> b, std::span<double> c,
          std::size_t n, std::size_t k, std::size_t m) {
  check_size(a.size() == n * k && b.size() == k * m && c.size() == n * m, "gemm");
  active().gemm(a.data(), b.data(), c.data(), n, k, m);
}

}  // namespace mnewton::kernels
