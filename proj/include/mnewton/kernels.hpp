#pragma once

// Dense double-precision inner loops with a scalar reference implementation
// and an AVX2/FMA variant. The variant is chosen once per process: the best
// supported ISA unless MNEWTON_SIMD=scalar is set in the environment.
//
// All variants use a fixed reduction order for a given ISA, so results are
// reproducible run to run on the same machine. Variants differ from each
// other only by rounding (lane-blocked sums, fused multiply-add).

#include <cstddef>
#include <span>
#include <string_view>

namespace mnewton::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y = A x, A row-major rows x cols
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
  // C = A B, A is n x k, B is k x m, all row-major
  void (*gemm)(const double* a, const double* b, double* c, std::size_t n, std::size_t k,
               std::size_t m);
};

bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

/// Kernel table for a specific ISA. Throws InputError when the ISA is not
/// compiled in or not supported by this CPU.
const KernelTable& table_for(Isa isa);

/// Process-wide table used by the library.
const KernelTable& active();

double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y);
void gemm(std::span<const double> a, std::span<const double> b, std::span<double> c,
          std::size_t n, std::size_t k, std::size_t m);

namespace detail {
extern const KernelTable scalar_table;
#ifdef MNEWTON_HAVE_AVX2_KERNELS
extern const KernelTable avx2_table;
#endif
}  // namespace detail

}  // namespace mnewton::kernels
