#pragma once

#include <optional>

#include "sinecone/spectra.hpp"

namespace sinecone {

// -(n-1)/2 + sqrt((n-1)^2/4 + x)
QuadReal xi(int n, const QuadReal& x);
// y (y + n - 1)
QuadReal eta(int n, const QuadReal& y);
Rational hardy_bound(int n);

// Base cutoff needed so that a family eta_{n+1}(xi_n(x) + j) - shift is complete up to
// `cutoff`. Empty when no base value can contribute. May round up when the exact value
// leaves the quadratic field.
std::optional<QuadReal> required_base_cutoff(int n, const QuadReal& cutoff, const QuadReal& shift);

struct OneFormParts {
  bool exact = true;
  bool coclosed = true;
};

struct EinsteinBlocks {
  bool conformal = true;
  bool delta_star = true;
  bool tt = true;
};

struct ConeOneFormSpectrum {
  std::optional<Spectrum> exact_part;
  std::optional<Spectrum> coclosed_part;
  bool outside_hypotheses = false;
};

struct ConeEinsteinSpectrum {
  std::optional<Spectrum> conformal_block;
  std::optional<Spectrum> delta_star_block;
  std::optional<Spectrum> tt_block;
  // case (ii): lambda_1 = n, case (iii): mu_1 = n - 1
  bool case_lambda1_eq_n = false;
  bool case_mu1_eq_n_minus_1 = false;
  bool outside_hypotheses = false;
};

Spectrum map_functions(const GeometricSpectrum& base, const QuadReal& cutoff);
ConeOneFormSpectrum map_one_forms(const GeometricSpectrum& base, const QuadReal& cutoff,
                                  OneFormParts parts = {});
ConeEinsteinSpectrum map_einstein(const GeometricSpectrum& base, const QuadReal& cutoff,
                                  EinsteinBlocks blocks = {});
// With allow_partial, lists the base cannot support up to `cutoff` come back with
// a lower cutoff instead of an InsufficientBaseCutoff error.
GeometricSpectrum iterate(const GeometricSpectrum& base, int k, const QuadReal& cutoff, bool allow_partial = false);

}  // namespace sinecone
