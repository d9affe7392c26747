#include <arm_neon.h>

#include "sinecone/simd/kernels.hpp"

namespace sinecone::simd {

namespace {

void sturm_count2(const double* d, const double* e2, std::size_t n, const double* shifts, double pivmin,
                  long* counts) {
  const float64x2_t s = vld1q_f64(shifts);
  const float64x2_t piv = vdupq_n_f64(pivmin);
  const float64x2_t negpiv = vdupq_n_f64(-pivmin);
  const float64x2_t zero = vdupq_n_f64(0.0);
  int64x2_t c = vdupq_n_s64(0);

  float64x2_t q = vsubq_f64(vdupq_n_f64(d[0]), s);
  q = vbslq_f64(vcltq_f64(vabsq_f64(q), piv), negpiv, q);
  c = vsubq_s64(c, vreinterpretq_s64_u64(vcltq_f64(q, zero)));
  for (std::size_t i = 1; i < n; ++i) {
    float64x2_t t = vsubq_f64(vdupq_n_f64(d[i]), s);
    q = vsubq_f64(t, vdivq_f64(vdupq_n_f64(e2[i - 1]), q));
    q = vbslq_f64(vcltq_f64(vabsq_f64(q), piv), negpiv, q);
    c = vsubq_s64(c, vreinterpretq_s64_u64(vcltq_f64(q, zero)));
  }
  counts[0] = static_cast<long>(vgetq_lane_s64(c, 0));
  counts[1] = static_cast<long>(vgetq_lane_s64(c, 1));
}

void sturm_count4_neon(const double* d, const double* e2, std::size_t n, const double* shifts, double pivmin,
                       long* counts) {
  sturm_count2(d, e2, n, shifts, pivmin, counts);
  sturm_count2(d, e2, n, shifts + 2, pivmin, counts + 2);
}

double weighted_sum_neon(const double* w, const double* x, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(w + i), vld1q_f64(x + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(w + i + 2), vld1q_f64(x + i + 2)));
  }
  double total = (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) + (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
  for (; i < n; ++i) total += w[i] * x[i];
  return total;
}

const Kernels kNeon{"neon", sturm_count4_neon, weighted_sum_neon};

}  // namespace

const Kernels* neon_kernels_compiled() { return &kNeon; }

}  // namespace sinecone::simd
