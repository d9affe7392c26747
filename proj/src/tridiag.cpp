#include "sinecone/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sinecone/errors.hpp"

namespace sinecone {

std::vector<double> smallest_eigenvalues(const Tridiagonal& t, int k, const simd::Kernels& kernels) {
  const std::size_t n = t.diag.size();
  if (n == 0 || t.off.size() + 1 != n) fail(ErrorKind::ConvergenceFailure, "malformed tridiagonal matrix");
  if (k < 0 || static_cast<std::size_t>(k) > n) fail(ErrorKind::ConvergenceFailure, "requested too many eigenvalues");

  std::vector<double> e2(n > 1 ? n - 1 : 1, 0.0);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double emax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(t.off[i - 1]);
    if (i + 1 < n) r += std::fabs(t.off[i]);
    if (!std::isfinite(t.diag[i]) || !std::isfinite(r)) {
      fail(ErrorKind::ConvergenceFailure, "non-finite matrix entry");
    }
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
    if (i + 1 < n) {
      e2[i] = t.off[i] * t.off[i];
      emax = std::max(emax, e2[i]);
    }
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, emax);
  const double span = std::max(std::fabs(lo), std::fabs(hi));
  lo -= 2 * eps * span + pivmin;
  hi += 2 * eps * span + pivmin;

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  double floor_lo = lo;
  for (int idx = 0; idx < k; ++idx) {
    double a = floor_lo, b = hi;
    int iter = 0;
    while (b - a > 2 * eps * std::max(std::fabs(a), std::fabs(b)) + pivmin) {
      if (++iter > 200) fail(ErrorKind::ConvergenceFailure, "bisection did not converge");
      double shifts[4];
      for (int m = 0; m < 4; ++m) shifts[m] = a + (b - a) * (m + 1) / 5.0;
      long counts[4];
      kernels.sturm_count4(t.diag.data(), e2.data(), n, shifts, pivmin, counts);
      double na = a, nb = b;
      for (int m = 0; m < 4; ++m) {
        if (counts[m] <= idx) na = shifts[m];
      }
      for (int m = 3; m >= 0; --m) {
        if (counts[m] > idx) nb = shifts[m];
      }
      if (na == a && nb == b) break;  // interval no longer representable finer
      a = na;
      b = nb;
    }
    double v = 0.5 * (a + b);
    out.push_back(v);
    floor_lo = a;
  }
  return out;
}

}  // namespace sinecone
