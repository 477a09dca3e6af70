#include <atomic>
#include <cstdlib>
#include <string>

#include "hyperlap/error.hpp"
#include "hyperlap/simd/kernels.hpp"

namespace hyperlap::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(HYPERLAP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend best_backend() noexcept {
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

const KernelTable* initial_table() {
  Backend chosen = best_backend();
  if (const char* env = std::getenv("HYPERLAP_SIMD")) {
    try {
      const Backend requested = parse_backend(env);
      if (backend_supported(requested)) chosen = requested;
    } catch (const Error&) {
      // unknown value: keep the CPUID choice
    }
  }
  return &kernels_for(chosen);
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

bool backend_supported(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& kernels_for(Backend b) {
  if (!backend_supported(b)) {
    throw Error(Errc::InvalidArgument,
                "SIMD backend '" + std::string(to_string(b)) + "' is not supported on this CPU");
  }
#if defined(HYPERLAP_HAVE_AVX2)
  if (b == Backend::Avx2) return avx2_kernels();
#endif
  return scalar_kernels();
}

const KernelTable& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

void set_backend(Backend b) { active_slot().store(&kernels_for(b), std::memory_order_release); }

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  if (backend_supported(Backend::Avx2)) out.push_back(Backend::Avx2);
  return out;
}

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

Backend parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::Scalar;
  if (name == "avx2") return Backend::Avx2;
  if (name == "auto") return best_backend();
  throw Error(Errc::InvalidArgument, "unknown SIMD backend '" + std::string(name) + "'");
}

}  // namespace hyperlap::simd
