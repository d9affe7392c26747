#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sinecone/exactreal.hpp"

namespace sinecone {

using Mult = std::int64_t;

// Family that produced a line. Order of the enumerators is the block order used
// for deterministic output.
enum class Block {
  Input,
  Function,
  Exact,
  CoclosedLambda,
  CoclosedMu,
  Conformal,
  DeltaStarLambda,
  DeltaStarMu,
  TTLambda,
  TTMu,
  TTKappa,
};

std::string_view block_name(Block b);
std::optional<Block> block_from_name(std::string_view name);

// i indexes the source base line (0 is the constant function for lambda
// families, 1-based for mu and kappa families), j is the radial shift.
struct Origin {
  Block block = Block::Input;
  int i = 0;
  int j = 0;
  Mult mult = 0;

  bool operator==(const Origin&) const = default;
};

struct RawLine {
  QuadReal value;
  Mult mult = 0;
  Origin origin;
};

struct SpectralLine {
  QuadReal value;
  Mult multiplicity = 0;
  std::vector<Origin> origins;
};

struct Spectrum {
  std::vector<SpectralLine> lines;
  QuadReal cutoff;

  bool empty() const { return lines.empty(); }
  Mult multiplicity_of(const QuadReal& v) const;
  std::optional<QuadReal> min() const;
};

Spectrum merge(std::vector<RawLine> raw, const QuadReal& cutoff);
// Builds a spectrum from (value, mult) pairs tagged as Input lines.
Spectrum spectrum_from(const std::vector<std::pair<QuadReal, Mult>>& values, const QuadReal& cutoff);
std::optional<QuadReal> positive_min(const Spectrum& s);
bool equal_up_to(const Spectrum& s1, const Spectrum& s2, const QuadReal& bound);
// Whole-operator view: concatenation of block spectra, cutoff is the smallest.
Spectrum union_of(const std::vector<const Spectrum*>& blocks);
// Throws InvariantViolation when the lines are not strictly ascending, exceed the cutoff,
// or carry inconsistent multiplicities.
void check_structure(const Spectrum& s, std::string_view label);

struct GeometricSpectrum {
  int n = 0;
  bool normalized = true;
  // accept bases violating the Obata or Killing lower bounds
  bool override_hypotheses = false;
  Spectrum spec0;
  std::optional<Spectrum> spec1D;
  std::optional<Spectrum> specE_TT;
};

// Enforces the ingestion invariants; returns warnings (Obata bound) that do not stop loading.
std::vector<std::string> validate(const GeometricSpectrum& gs);

}  // namespace sinecone
