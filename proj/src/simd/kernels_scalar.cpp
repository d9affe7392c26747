#include <cmath>

#include "sinecone/simd/kernels.hpp"

namespace sinecone::simd {

namespace {

void sturm_count4(const double* d, const double* e2, std::size_t n, const double* shifts, double pivmin,
                  long* counts) {
  for (int k = 0; k < 4; ++k) {
    const double s = shifts[k];
    long c = 0;
    double q = d[0] - s;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0) ++c;
    for (std::size_t i = 1; i < n; ++i) {
      q = (d[i] - s) - e2[i - 1] / q;
      if (std::fabs(q) < pivmin) q = -pivmin;
      if (q < 0) ++c;
    }
    counts[k] = c;
  }
}

double weighted_sum(const double* w, const double* x, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) acc[l] += w[i + l] * x[i + l];
  }
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (; i < n; ++i) total += w[i] * x[i];
  return total;
}

const Kernels kScalar{"scalar", sturm_count4, weighted_sum};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace sinecone::simd
