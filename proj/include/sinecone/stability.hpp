#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sinecone/spectra.hpp"

namespace sinecone {

struct Witness {
  QuadReal value;
  std::string component;  // "spec0" or "specE_TT"
  std::optional<Origin> origin;
};

struct Verdict {
  bool stable = false;
  bool strict = false;
  std::optional<Witness> witness;
};

struct StabilityReport {
  int n = 0;
  Verdict eh;
  Verdict linear;
  Verdict tangential;
  Verdict physical;  // strict is unused
  // only set by predict_cone: whether the cone Einstein operator is bounded below
  std::optional<bool> bounded_below;
  std::vector<std::pair<std::string, QuadReal>> thresholds;
};

// 5n/2 - sqrt(n^2 + 8n)/2
QuadReal cone_linear_threshold(int n);

// Smallest positive spec0 line that counts for the stability bounds: lines at the
// value n (conformal directions) and lines produced only by the i = 0 family of a
// cone map are skipped.
std::optional<SpectralLine> relevant_positive_min(const GeometricSpectrum& gs);

StabilityReport classify(const GeometricSpectrum& gs);
StabilityReport predict_cone(const GeometricSpectrum& gs);
// Direct classification of the computed cone; all-unstable when the cone Einstein
// operator is unbounded below.
StabilityReport classify_cone(const GeometricSpectrum& gs, const QuadReal& cutoff);

struct CrossCheck {
  bool consistent = true;
  std::vector<std::string> discrepancies;
  StabilityReport predicted;
  StabilityReport direct;
};
CrossCheck cross_check(const GeometricSpectrum& gs, const QuadReal& cutoff);

// 2(n+2)+1, lowered to the largest cone cutoff the base lists can support for the TT block.
QuadReal default_cone_cutoff(const GeometricSpectrum& gs);

}  // namespace sinecone
