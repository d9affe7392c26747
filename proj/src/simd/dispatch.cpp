#include <cstdlib>
#include <cstring>

#include "sinecone/simd/kernels.hpp"

namespace sinecone::simd {

#if defined(__x86_64__) || defined(_M_X64)
const Kernels* avx2_kernels_compiled();
#endif
#if defined(__aarch64__)
const Kernels* neon_kernels_compiled();
#endif

const Kernels* avx2_kernels() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return avx2_kernels_compiled();
#endif
  return nullptr;
}

const Kernels* neon_kernels() {
#if defined(__aarch64__)
  return neon_kernels_compiled();
#else
  return nullptr;
#endif
}

const Kernels& active_kernels() {
  static const Kernels* chosen = [] {
    const char* force = std::getenv("SINECONE_SIMD");
    if (force && std::strcmp(force, "scalar") == 0) return &scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return k;
    if (const Kernels* k = neon_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace sinecone::simd
