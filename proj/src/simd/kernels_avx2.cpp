#include <immintrin.h>

#include "sinecone/simd/kernels.hpp"

namespace sinecone::simd {

namespace {

void sturm_count4_avx2(const double* d, const double* e2, std::size_t n, const double* shifts, double pivmin,
                       long* counts) {
  const __m256d s = _mm256_loadu_pd(shifts);
  const __m256d piv = _mm256_set1_pd(pivmin);
  const __m256d negpiv = _mm256_set1_pd(-pivmin);
  const __m256d signmask = _mm256_set1_pd(-0.0);
  const __m256d zero = _mm256_setzero_pd();
  __m256i c = _mm256_setzero_si256();

  __m256d q = _mm256_sub_pd(_mm256_set1_pd(d[0]), s);
  __m256d small = _mm256_cmp_pd(_mm256_andnot_pd(signmask, q), piv, _CMP_LT_OQ);
  q = _mm256_blendv_pd(q, negpiv, small);
  c = _mm256_sub_epi64(c, _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));
  for (std::size_t i = 1; i < n; ++i) {
    __m256d t = _mm256_sub_pd(_mm256_set1_pd(d[i]), s);
    q = _mm256_sub_pd(t, _mm256_div_pd(_mm256_set1_pd(e2[i - 1]), q));
    small = _mm256_cmp_pd(_mm256_andnot_pd(signmask, q), piv, _CMP_LT_OQ);
    q = _mm256_blendv_pd(q, negpiv, small);
    c = _mm256_sub_epi64(c, _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));
  }
  alignas(32) long long out[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(out), c);
  for (int k = 0; k < 4; ++k) counts[k] = static_cast<long>(out[k]);
}

double weighted_sum_avx2(const double* w, const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) total += w[i] * x[i];
  return total;
}

const Kernels kAvx2{"avx2", sturm_count4_avx2, weighted_sum_avx2};

}  // namespace

const Kernels* avx2_kernels_compiled() { return &kAvx2; }

}  // namespace sinecone::simd
