#pragma once

// Data-parallel inner loops shared by the distance, kernel and eigensolver
// code. Each kernel has a portable scalar reference and, on x86-64, an
// AVX2/FMA variant. The active table is picked once at startup from CPUID and
// can be overridden with HYPERLAP_SIMD=scalar|avx2|auto or set_backend().

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace hyperlap::simd {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  Backend backend;
  // sum_i (a_i - b_i)^2
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  // sum_i a_i * b_i
  double (*dot)(const double* a, const double* b, std::size_t n);
  // Plane rotation: x <- c*x - s*y, y <- s*x + c*y (elementwise).
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
};

const KernelTable& scalar_kernels() noexcept;
#if defined(HYPERLAP_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif

bool backend_supported(Backend b) noexcept;
// Throws hyperlap::Error(InvalidArgument) when the backend is not available.
const KernelTable& kernels_for(Backend b);
const KernelTable& active() noexcept;
void set_backend(Backend b);
std::vector<Backend> available_backends();

std::string_view to_string(Backend b) noexcept;
// Accepts "scalar", "avx2"; "auto" resolves to the best supported backend.
Backend parse_backend(std::string_view name);

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  return active().squared_distance(a.data(), b.data(), a.size());
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  active().rotate(x.data(), y.data(), x.size(), c, s);
}

}  // namespace hyperlap::simd
