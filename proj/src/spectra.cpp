#include "sinecone/spectra.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "sinecone/errors.hpp"

namespace sinecone {

namespace {

constexpr std::array<std::pair<Block, std::string_view>, 11> kBlockNames{{
    {Block::Input, "input"},
    {Block::Function, "function"},
    {Block::Exact, "exact"},
    {Block::CoclosedLambda, "coclosed-lambda"},
    {Block::CoclosedMu, "coclosed-mu"},
    {Block::Conformal, "conformal"},
    {Block::DeltaStarLambda, "delta-star-lambda"},
    {Block::DeltaStarMu, "delta-star-mu"},
    {Block::TTLambda, "tt-lambda"},
    {Block::TTMu, "tt-mu"},
    {Block::TTKappa, "tt-kappa"},
}};

bool origin_less(const Origin& x, const Origin& y) {
  return std::tie(x.block, x.i, x.j) < std::tie(y.block, y.i, y.j);
}

}  // namespace

std::string_view block_name(Block b) {
  for (const auto& [blk, name] : kBlockNames) {
    if (blk == b) return name;
  }
  return "input";
}

std::optional<Block> block_from_name(std::string_view name) {
  for (const auto& [blk, nm] : kBlockNames) {
    if (nm == name) return blk;
  }
  return std::nullopt;
}

Mult Spectrum::multiplicity_of(const QuadReal& v) const {
  for (const auto& line : lines) {
    if (line.value == v) return line.multiplicity;
  }
  return 0;
}

std::optional<QuadReal> Spectrum::min() const {
  if (lines.empty()) return std::nullopt;
  return lines.front().value;
}

Spectrum merge(std::vector<RawLine> raw, const QuadReal& cutoff) {
  std::erase_if(raw, [&](const RawLine& r) { return r.mult <= 0 || r.value > cutoff; });
  std::sort(raw.begin(), raw.end(), [](const RawLine& x, const RawLine& y) {
    Ordering c = compare(x.value, y.value);
    if (c != Ordering::Equal) return c == Ordering::Less;
    return origin_less(x.origin, y.origin);
  });
  Spectrum out;
  out.cutoff = cutoff;
  for (auto& r : raw) {
    if (out.lines.empty() || out.lines.back().value != r.value) {
      out.lines.push_back(SpectralLine{r.value, 0, {}});
    }
    SpectralLine& line = out.lines.back();
    line.multiplicity += r.mult;
    Origin o = r.origin;
    o.mult = r.mult;
    if (!line.origins.empty() && !origin_less(line.origins.back(), o)) {
      line.origins.back().mult += o.mult;
    } else {
      line.origins.push_back(o);
    }
  }
  return out;
}

Spectrum spectrum_from(const std::vector<std::pair<QuadReal, Mult>>& values, const QuadReal& cutoff) {
  std::vector<RawLine> raw;
  int idx = 0;
  for (const auto& [v, m] : values) raw.push_back({v, m, Origin{Block::Input, idx++, 0, m}});
  return merge(std::move(raw), cutoff);
}

std::optional<QuadReal> positive_min(const Spectrum& s) {
  for (const auto& line : s.lines) {
    if (line.value.sign() > 0) return line.value;
  }
  return std::nullopt;
}

bool equal_up_to(const Spectrum& s1, const Spectrum& s2, const QuadReal& bound) {
  if (bound > s1.cutoff || bound > s2.cutoff) {
    fail(ErrorKind::CutoffTooSmall, "comparison bound " + bound.str() + " exceeds a spectrum cutoff");
  }
  auto a = s1.lines.begin();
  auto b = s2.lines.begin();
  while (true) {
    bool ea = a == s1.lines.end() || a->value > bound;
    bool eb = b == s2.lines.end() || b->value > bound;
    if (ea || eb) return ea && eb;
    if (a->value != b->value || a->multiplicity != b->multiplicity) return false;
    ++a;
    ++b;
  }
}

Spectrum union_of(const std::vector<const Spectrum*>& blocks) {
  std::vector<RawLine> raw;
  std::optional<QuadReal> cut;
  for (const Spectrum* s : blocks) {
    if (!cut || s->cutoff < *cut) cut = s->cutoff;
    for (const auto& line : s->lines) {
      for (const auto& o : line.origins) raw.push_back({line.value, o.mult, o});
    }
  }
  return merge(std::move(raw), cut.value_or(QuadReal(0)));
}

void check_structure(const Spectrum& s, std::string_view label) {
  const std::string where(label);
  for (std::size_t k = 0; k < s.lines.size(); ++k) {
    const auto& line = s.lines[k];
    if (line.multiplicity <= 0) fail(ErrorKind::InvariantViolation, where + ": multiplicity must be positive");
    if (line.value > s.cutoff) {
      fail(ErrorKind::InvariantViolation, where + ": value " + line.value.str() + " exceeds the cutoff");
    }
    if (k > 0 && !(s.lines[k - 1].value < line.value)) {
      fail(ErrorKind::InvariantViolation, where + ": values not strictly ascending");
    }
    if (!line.origins.empty()) {
      Mult total = 0;
      for (const auto& o : line.origins) total += o.mult;
      if (total != line.multiplicity) {
        fail(ErrorKind::InvariantViolation, where + ": origin multiplicities do not add up");
      }
    }
  }
}

std::vector<std::string> validate(const GeometricSpectrum& gs) {
  std::vector<std::string> warnings;
  if (gs.n < 2) fail(ErrorKind::InvariantViolation, "dimension n must be at least 2");
  check_structure(gs.spec0, "spec0");
  if (gs.spec0.lines.empty() || gs.spec0.lines.front().value != QuadReal(0)) {
    fail(ErrorKind::InvariantViolation, "spec0 must contain the eigenvalue 0 as its lowest line");
  }
  if (gs.spec0.lines.front().multiplicity != 1) {
    fail(ErrorKind::InvariantViolation,
         "eigenvalue 0 of spec0 must have multiplicity 1 (connected base)");
  }
  const QuadReal n(gs.n);
  for (const auto& line : gs.spec0.lines) {
    if (line.value.sign() > 0 && line.value < n) {
      warnings.push_back("spec0 value " + line.value.str() + " lies below n=" + std::to_string(gs.n) +
                         " (Obata bound for smooth Einstein bases)");
    }
  }
  if (gs.spec1D) {
    check_structure(*gs.spec1D, "spec1D");
    const QuadReal bound(gs.n - 1);
    for (const auto& line : gs.spec1D->lines) {
      if (line.value < bound && !gs.override_hypotheses) {
        fail(ErrorKind::InvariantViolation,
             "spec1D value " + line.value.str() + " below n-1, violates the Killing bound on coclosed 1-forms");
      }
    }
  }
  if (gs.specE_TT) check_structure(*gs.specE_TT, "specE_TT");
  return warnings;
}

}  // namespace sinecone
