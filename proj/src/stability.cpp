#include "sinecone/stability.hpp"

#include <algorithm>

#include "sinecone/conemaps.hpp"
#include "sinecone/errors.hpp"

namespace sinecone {

namespace {

struct Bound {
  bool ge;
  bool gt;
};

// min is the smallest line (if any line lies below cutoff); decides min >= thr and min > thr
Bound decide(const std::optional<QuadReal>& min, const QuadReal& cutoff, const QuadReal& thr, const char* what) {
  if (min) return {*min >= thr, *min > thr};
  if (cutoff >= thr) return {true, true};
  fail(ErrorKind::InsufficientCutoff, std::string(what) + " is known only up to " + cutoff.str() +
                                          ", cannot compare with threshold " + thr.str());
}

bool zonal(const SpectralLine& line) {
  if (line.origins.empty()) return false;
  return std::all_of(line.origins.begin(), line.origins.end(),
                     [](const Origin& o) { return o.block == Block::Function && o.i == 0; });
}

Witness witness_of(const SpectralLine& line, const char* component) {
  Witness w{line.value, component, std::nullopt};
  if (!line.origins.empty()) w.origin = line.origins.front();
  return w;
}

const Spectrum& tt_of(const GeometricSpectrum& gs) {
  if (!gs.specE_TT) fail(ErrorKind::MissingData, "stability needs the TT spectrum of the Einstein operator");
  return *gs.specE_TT;
}

}  // namespace

QuadReal cone_linear_threshold(int n) {
  return make_quad(ratio(5 * n, 2), ratio(-1, 2), Rational(n * n + 8 * n));
}

std::optional<SpectralLine> relevant_positive_min(const GeometricSpectrum& gs) {
  const QuadReal dim(gs.n);
  for (const auto& line : gs.spec0.lines) {
    if (line.value.sign() <= 0 || line.value == dim || zonal(line)) continue;
    return line;
  }
  return std::nullopt;
}

StabilityReport classify(const GeometricSpectrum& gs) {
  const int n = gs.n;
  const Spectrum& tt = tt_of(gs);
  StabilityReport r;
  r.n = n;
  const QuadReal hardy(ratio(-(n - 1) * (n - 1), 4));
  const QuadReal lin_thr(2 * (n - 1));
  const QuadReal tan_thr(2 * (n + 1));
  r.thresholds = {{"eh", QuadReal(0)}, {"linear", lin_thr}, {"tangential", tan_thr}, {"physical", hardy}};

  std::optional<Witness> tt_w;
  if (!tt.empty()) tt_w = witness_of(tt.lines.front(), "specE_TT");
  const Bound eh = decide(tt.min(), tt.cutoff, QuadReal(0), "specE_TT");
  r.eh = {eh.ge, eh.gt, tt_w};
  r.physical = {decide(tt.min(), tt.cutoff, hardy, "specE_TT").ge, false, tt_w};

  auto p = relevant_positive_min(gs);
  std::optional<QuadReal> pv;
  std::optional<Witness> p_w;
  if (p) {
    pv = p->value;
    p_w = witness_of(*p, "spec0");
  }
  auto spectral = [&](const QuadReal& thr, bool strict) {
    Bound b = decide(pv, gs.spec0.cutoff, thr, "spec0");
    return strict ? b.gt : b.ge;
  };
  auto notion = [&](const QuadReal& thr) {
    Verdict v;
    v.stable = eh.ge && spectral(thr, false);
    v.strict = eh.gt && spectral(thr, true);
    v.witness = (!eh.ge || (!eh.gt && v.stable)) ? tt_w : (p_w ? p_w : tt_w);
    return v;
  };
  r.linear = notion(lin_thr);
  r.tangential = notion(tan_thr);
  return r;
}

StabilityReport predict_cone(const GeometricSpectrum& gs) {
  const int n = gs.n;
  StabilityReport base = classify(gs);
  StabilityReport r;
  r.n = n + 1;
  const QuadReal thr = cone_linear_threshold(n);
  r.thresholds = {{"eh", QuadReal(0)},
                  {"linear", QuadReal(2 * n)},
                  {"tangential", QuadReal(2 * (n + 2))},
                  {"physical", QuadReal(ratio(-n * n, 4))},
                  {"base_linear_spectral", thr}};
  r.eh = base.eh;
  r.tangential = base.tangential;

  auto p = relevant_positive_min(gs);
  std::optional<QuadReal> pv;
  if (p) pv = p->value;
  r.linear.stable = base.linear.stable && decide(pv, gs.spec0.cutoff, thr, "spec0").ge;
  r.linear.strict = base.linear.strict && decide(pv, gs.spec0.cutoff, thr, "spec0").gt;
  r.linear.witness = base.linear.witness;
  if (base.linear.stable && p) r.linear.witness = witness_of(*p, "spec0");

  r.bounded_below = base.physical.stable;
  r.physical = {base.physical.stable, false, base.physical.witness};
  return r;
}

StabilityReport classify_cone(const GeometricSpectrum& gs, const QuadReal& cutoff) {
  GeometricSpectrum cone;
  cone.n = gs.n + 1;
  cone.override_hypotheses = gs.override_hypotheses;
  try {
    cone.specE_TT = *map_einstein(gs, cutoff, {false, false, true}).tt_block;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnboundedBelow) throw;
    StabilityReport r;
    r.n = gs.n + 1;
    r.bounded_below = false;
    return r;
  }
  // spec0 of the cone is only consulted when EH holds, so cap it at what the base supports
  QuadReal fcut = cutoff;
  try {
    QuadReal reach = eta(gs.n + 1, xi(gs.n, gs.spec0.cutoff));
    if (reach < fcut) fcut = reach;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInField && e.kind() != ErrorKind::MixedField) throw;
  }
  cone.spec0 = map_functions(gs, fcut);
  StabilityReport r = classify(cone);
  r.bounded_below = true;
  return r;
}

CrossCheck cross_check(const GeometricSpectrum& gs, const QuadReal& cutoff) {
  CrossCheck c;
  c.predicted = predict_cone(gs);
  c.direct = classify_cone(gs, cutoff);
  auto cmp = [&](const char* name, bool p, bool d) {
    if (p != d) {
      c.consistent = false;
      c.discrepancies.push_back(std::string(name) + ": predicted " + (p ? "true" : "false") + ", direct " +
                                (d ? "true" : "false"));
    }
  };
  cmp("eh", c.predicted.eh.stable, c.direct.eh.stable);
  cmp("eh strict", c.predicted.eh.strict, c.direct.eh.strict);
  cmp("linear", c.predicted.linear.stable, c.direct.linear.stable);
  cmp("linear strict", c.predicted.linear.strict, c.direct.linear.strict);
  cmp("tangential", c.predicted.tangential.stable, c.direct.tangential.stable);
  cmp("tangential strict", c.predicted.tangential.strict, c.direct.tangential.strict);
  cmp("physical", c.predicted.physical.stable, c.direct.physical.stable);
  cmp("bounded below", c.predicted.bounded_below.value_or(false), c.direct.bounded_below.value_or(false));
  return c;
}

QuadReal default_cone_cutoff(const GeometricSpectrum& gs) {
  const int n = gs.n;
  QuadReal c(2 * (n + 2) + 1);
  QuadReal base = gs.spec0.cutoff;
  if (gs.spec1D && gs.spec1D->cutoff + QuadReal(1) < base) base = gs.spec1D->cutoff + QuadReal(1);
  if (gs.specE_TT && gs.specE_TT->cutoff < base) base = gs.specE_TT->cutoff;
  try {
    QuadReal reach = eta(n + 1, xi(n, base));
    if (reach < c) c = reach;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInField && e.kind() != ErrorKind::MixedField) throw;
  }
  return c;
}

}  // namespace sinecone
