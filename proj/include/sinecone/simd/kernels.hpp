#pragma once

#include <cstddef>

namespace sinecone::simd {

struct Kernels {
  const char* name;
  // Sturm counts of the symmetric tridiagonal matrix (diagonal d, squared
  // off-diagonal e2) at four shifts: counts[k] = #eigenvalues < shifts[k].
  void (*sturm_count4)(const double* d, const double* e2, std::size_t n, const double* shifts, double pivmin,
                       long* counts);
  // sum_i w[i] * x[i], accumulated in four interleaved partial sums
  double (*weighted_sum)(const double* w, const double* x, std::size_t n);
};

const Kernels& scalar_kernels();
// nullptr when the variant is not compiled in or not supported by the CPU
const Kernels* avx2_kernels();
const Kernels* neon_kernels();
// Best supported variant; SINECONE_SIMD=scalar forces the reference kernels.
const Kernels& active_kernels();

}  // namespace sinecone::simd
