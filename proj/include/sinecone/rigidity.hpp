#pragma once

#include <optional>
#include <vector>

#include "sinecone/spectra.hpp"

namespace sinecone {

struct IEDCertificate {
  QuadReal kappa;
  int j = 0;
  bool bounded = false;
  Mult multiplicity = 0;
  int source_index = 0;  // 1-based index of the TT line
};

// j >= 0 with (2j+1) m = -kappa - j(j+n), m = xi_n(kappa); the product case kappa = -2(n-1)
// gives the form 2(n-1) - j(j+n) on the right.
std::optional<int> solve_zero_equation(int n, const QuadReal& kappa);
// Zeros of the cone TT block eta_{n+1}(xi_n(kappa) + j); checked against solve_zero_equation.
std::vector<IEDCertificate> find_ieds(const GeometricSpectrum& gs);

enum class ScanStatus { UnboundedBelow, IED, NoIED };

struct ScanRow {
  int n = 0;
  ScanStatus status = ScanStatus::NoIED;
  QuadReal kappa;
  std::optional<QuadReal> m1;
  std::optional<IEDCertificate> certificate;
  Integer ell_squared;  // (n-9)(n-1)
  bool ell_integral = false;
};

std::vector<ScanRow> product_rigidity_scan(int n_min, int n_max);

}  // namespace sinecone
