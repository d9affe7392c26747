#include "sinecone/conemaps.hpp"

#include <functional>

#include "sinecone/errors.hpp"

namespace sinecone {

namespace {

using MultAt = std::function<Mult(int j, Mult base)>;

Mult plain(int, Mult base) { return base; }

// eta_{n+1}(xi_n(x) + j) - shift for j = 0, 1, ... up to cutoff
void emit_family(int n, Block blk, int i, const QuadReal& x, Mult mult, const QuadReal& shift,
                 const QuadReal& cutoff, std::vector<RawLine>& out, const MultAt& mult_at = plain) {
  const QuadReal y0 = xi(n, x);
  for (int j = 0;; ++j) {
    QuadReal v = eta(n + 1, y0 + QuadReal(j)) - shift;
    if (v > cutoff) break;
    Mult m = mult_at(j, mult);
    if (m > 0) out.push_back({v, m, Origin{blk, i, j, m}});
  }
}

void require_component(const char* label, const Spectrum* comp, const std::optional<QuadReal>& need,
                       const QuadReal& lower) {
  if (!need || *need < lower) return;
  if (comp == nullptr) {
    fail(ErrorKind::MissingData, std::string("base ") + label + " spectrum is required up to " + need->str() +
                                     " but is not available");
  }
  if (comp->cutoff < *need) {
    fail(ErrorKind::InsufficientBaseCutoff, std::string("base ") + label + " is complete only up to " +
                                                comp->cutoff.str() + ", need " + need->str() + " (" +
                                                need->to_decimal(6) + ")");
  }
}

std::optional<QuadReal> minus_one(std::optional<QuadReal> v) {
  if (v) *v = *v - QuadReal(1);
  return v;
}

void check_normalized(const GeometricSpectrum& base) {
  validate(base);
  if (!base.normalized) fail(ErrorKind::InvariantViolation, "base must be normalized to Ric = (n-1)g");
}

// lambda_1 < n or mu_1 < n-1 lies outside the hypotheses of the 1-form and Einstein maps
bool check_hypotheses(const GeometricSpectrum& base) {
  bool outside = false;
  auto lam1 = positive_min(base.spec0);
  if (lam1 && *lam1 < QuadReal(base.n)) {
    if (!base.override_hypotheses) {
      fail(ErrorKind::InvariantViolation,
           "spec0 has positive value " + lam1->str() + " below n (Obata bound); set override to proceed");
    }
    outside = true;
  }
  if (base.spec1D && !base.spec1D->empty() && *base.spec1D->min() < QuadReal(base.n - 1)) outside = true;
  return outside;
}

int lambda_index(std::size_t k) { return static_cast<int>(k); }
int one_based(std::size_t k) { return static_cast<int>(k) + 1; }

}  // namespace

Rational hardy_bound(int n) { return ratio(-(n - 1) * (n - 1), 4); }

QuadReal xi(int n, const QuadReal& x) {
  const Rational h = ratio((n - 1) * (n - 1), 4);
  QuadReal t = x + QuadReal(h);
  if (t.sign() < 0) {
    fail(ErrorKind::BelowHardyBound, "xi_" + std::to_string(n) + "(" + x.str() + ") undefined: argument below -(n-1)^2/4");
  }
  auto root = t.sqrt();
  if (!root) fail(ErrorKind::NotInField, "xi of " + x.str() + " leaves the quadratic field");
  return QuadReal(ratio(-(n - 1), 2)) + *root;
}

QuadReal eta(int n, const QuadReal& y) { return y * (y + QuadReal(n - 1)); }

std::optional<QuadReal> required_base_cutoff(int n, const QuadReal& cutoff, const QuadReal& shift) {
  QuadReal top = cutoff + shift;
  const QuadReal vertex(ratio(-n * n, 4));
  if (top < vertex) return std::nullopt;
  QuadReal t = top - vertex;
  auto root = t.sqrt();
  if (!root) {
    // eta_n(xi_{n+1}(.)) is increasing, so rounding the argument up stays conservative
    t = QuadReal(Rational(top.ceil())) - vertex;
    root = t.sqrt();
  }
  QuadReal y = QuadReal(ratio(-n, 2)) + *root;
  return eta(n, y);
}

Spectrum map_functions(const GeometricSpectrum& base, const QuadReal& cutoff) {
  check_normalized(base);
  const int n = base.n;
  require_component("spec0", &base.spec0, required_base_cutoff(n, cutoff, 0), QuadReal(0));
  std::vector<RawLine> raw;
  for (std::size_t k = 0; k < base.spec0.lines.size(); ++k) {
    const auto& line = base.spec0.lines[k];
    emit_family(n, Block::Function, lambda_index(k), line.value, line.multiplicity, 0, cutoff, raw);
  }
  return merge(std::move(raw), cutoff);
}

ConeOneFormSpectrum map_one_forms(const GeometricSpectrum& base, const QuadReal& cutoff, OneFormParts parts) {
  check_normalized(base);
  const int n = base.n;
  ConeOneFormSpectrum out;
  out.outside_hypotheses = check_hypotheses(base);
  const Spectrum* s1 = base.spec1D ? &*base.spec1D : nullptr;
  if (parts.exact) {
    require_component("spec0", &base.spec0, required_base_cutoff(n, cutoff, QuadReal(n)), QuadReal(0));
    std::vector<RawLine> raw;
    for (std::size_t k = 0; k < base.spec0.lines.size(); ++k) {
      const auto& line = base.spec0.lines[k];
      MultAt skip_constant = [k](int j, Mult m) { return (k == 0 && j == 0) ? 0 : m; };
      emit_family(n, Block::Exact, lambda_index(k), line.value, line.multiplicity, QuadReal(n), cutoff, raw,
                  skip_constant);
    }
    out.exact_part = merge(std::move(raw), cutoff);
  }
  if (parts.coclosed) {
    auto need = required_base_cutoff(n, cutoff, QuadReal(1));
    require_component("spec0", &base.spec0, need, QuadReal(0));
    require_component("spec1D", s1, minus_one(need), QuadReal(n - 1));
    std::vector<RawLine> raw;
    for (std::size_t k = 1; k < base.spec0.lines.size(); ++k) {
      const auto& line = base.spec0.lines[k];
      emit_family(n, Block::CoclosedLambda, lambda_index(k), line.value, line.multiplicity, QuadReal(1), cutoff,
                  raw);
    }
    if (s1) {
      for (std::size_t k = 0; k < s1->lines.size(); ++k) {
        const auto& line = s1->lines[k];
        emit_family(n, Block::CoclosedMu, one_based(k), line.value + QuadReal(1), line.multiplicity, QuadReal(1),
                    cutoff, raw);
      }
    }
    out.coclosed_part = merge(std::move(raw), cutoff);
  }
  return out;
}

ConeEinsteinSpectrum map_einstein(const GeometricSpectrum& base, const QuadReal& cutoff, EinsteinBlocks blocks) {
  check_normalized(base);
  const int n = base.n;
  if (n < 3) fail(ErrorKind::InvariantViolation, "the Einstein operator map needs n >= 3");
  ConeEinsteinSpectrum out;
  out.outside_hypotheses = check_hypotheses(base);
  const Spectrum* s1 = base.spec1D ? &*base.spec1D : nullptr;
  const Spectrum* tt = base.specE_TT ? &*base.specE_TT : nullptr;
  const QuadReal hardy(hardy_bound(n));
  if (tt) {
    for (const auto& line : tt->lines) {
      if (line.value < hardy) {
        fail(ErrorKind::UnboundedBelow,
             "TT eigenvalue " + line.value.str() + " < -(n-1)^2/4: the cone Einstein operator is unbounded below "
             "(Hardy inequality argument, see README)");
      }
    }
  }

  auto lam1 = positive_min(base.spec0);
  out.case_lambda1_eq_n = lam1 && *lam1 == QuadReal(n);
  out.case_mu1_eq_n_minus_1 = s1 && !s1->empty() && *s1->min() == QuadReal(n - 1);
  const bool case2 = out.case_lambda1_eq_n;
  const bool case3 = out.case_mu1_eq_n_minus_1;

  if (blocks.conformal) {
    const QuadReal shift(2 * n);
    require_component("spec0", &base.spec0, required_base_cutoff(n, cutoff, shift), QuadReal(0));
    std::vector<RawLine> raw;
    for (std::size_t k = 0; k < base.spec0.lines.size(); ++k) {
      const auto& line = base.spec0.lines[k];
      MultAt m = [k, case2](int j, Mult base_mult) -> Mult {
        if (k == 0 && j <= 1) return 1;
        if (k == 1 && j == 0 && case2) return base_mult;
        return 2 * base_mult;
      };
      emit_family(n, Block::Conformal, lambda_index(k), line.value, line.multiplicity, shift, cutoff, raw, m);
    }
    out.conformal_block = merge(std::move(raw), cutoff);
  }

  if (blocks.delta_star) {
    const QuadReal shift(n + 1);
    auto need = required_base_cutoff(n, cutoff, shift);
    require_component("spec0", &base.spec0, need, QuadReal(0));
    require_component("spec1D", s1, minus_one(need), QuadReal(n - 1));
    std::vector<RawLine> raw;
    for (std::size_t k = 1; k < base.spec0.lines.size(); ++k) {
      const auto& line = base.spec0.lines[k];
      MultAt m = [k, case2](int j, Mult b) -> Mult { return (case2 && k == 1 && j == 0) ? 0 : b; };
      emit_family(n, Block::DeltaStarLambda, lambda_index(k), line.value, line.multiplicity, shift, cutoff, raw, m);
    }
    if (s1) {
      for (std::size_t k = 0; k < s1->lines.size(); ++k) {
        const auto& line = s1->lines[k];
        MultAt m = [k, case3](int j, Mult b) -> Mult { return (case3 && k == 0 && j == 0) ? 0 : b; };
        emit_family(n, Block::DeltaStarMu, one_based(k), line.value + QuadReal(1), line.multiplicity, shift, cutoff,
                    raw, m);
      }
    }
    out.delta_star_block = merge(std::move(raw), cutoff);
  }

  if (blocks.tt) {
    auto need = required_base_cutoff(n, cutoff, 0);
    require_component("spec0", &base.spec0, need, QuadReal(0));
    require_component("spec1D", s1, minus_one(need), QuadReal(n - 1));
    require_component("specE_TT", tt, need, hardy);
    std::vector<RawLine> raw;
    for (std::size_t k = 1; k < base.spec0.lines.size(); ++k) {
      if (case2 && k == 1) continue;
      const auto& line = base.spec0.lines[k];
      emit_family(n, Block::TTLambda, lambda_index(k), line.value, line.multiplicity, 0, cutoff, raw);
    }
    if (s1) {
      for (std::size_t k = 0; k < s1->lines.size(); ++k) {
        if (case3 && k == 0) continue;
        const auto& line = s1->lines[k];
        emit_family(n, Block::TTMu, one_based(k), line.value + QuadReal(1), line.multiplicity, 0, cutoff, raw);
      }
    }
    if (tt) {
      for (std::size_t k = 0; k < tt->lines.size(); ++k) {
        const auto& line = tt->lines[k];
        emit_family(n, Block::TTKappa, one_based(k), line.value, line.multiplicity, 0, cutoff, raw);
      }
    }
    out.tt_block = merge(std::move(raw), cutoff);
  }
  return out;
}

namespace {

// Largest cone cutoff for a block with the given shift that `limit` (the smallest
// relevant base cutoff) supports.
QuadReal reachable(int n, const QuadReal& limit, long shift, const QuadReal& planned) {
  try {
    QuadReal r = eta(n + 1, xi(n, limit)) - QuadReal(shift);
    return r < planned ? r : planned;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInField && e.kind() != ErrorKind::MixedField &&
        e.kind() != ErrorKind::BelowHardyBound) {
      throw;
    }
    return planned;
  }
}

QuadReal smaller(const QuadReal& a, const QuadReal& b) { return a < b ? a : b; }

}  // namespace

GeometricSpectrum iterate(const GeometricSpectrum& base, int k, const QuadReal& cutoff, bool allow_partial) {
  if (k < 0) fail(ErrorKind::InvariantViolation, "iteration count must be nonnegative");
  check_normalized(base);
  if (k == 0) return base;
  const bool with1 = base.spec1D.has_value();
  const bool withE = with1 && base.specE_TT.has_value();

  // cutoffs per stage, computed backward from the requested one; intermediate
  // stages are rounded up to integers
  struct Cut {
    QuadReal c0, c1, cE;
  };
  std::vector<Cut> cuts(static_cast<std::size_t>(k) + 1);
  cuts[static_cast<std::size_t>(k)] = {cutoff, cutoff, cutoff};
  for (int t = k; t > 1; --t) {
    const int m = base.n + t - 1;
    const Cut& c = cuts[static_cast<std::size_t>(t)];
    auto up = [](std::optional<QuadReal> v) { return v ? QuadReal(Rational(v->ceil())) : QuadReal(0); };
    auto mx = [](const QuadReal& a, const QuadReal& b) { return a < b ? b : a; };
    QuadReal n0 = up(required_base_cutoff(m, c.c0, 0));
    QuadReal n1(0), nE(0);
    if (with1) {
      n0 = mx(n0, up(required_base_cutoff(m, c.c1, QuadReal(1))));
      n1 = up(minus_one(required_base_cutoff(m, c.c1, QuadReal(1))));
    }
    if (withE) {
      QuadReal b = up(required_base_cutoff(m, c.cE, 0));
      n0 = mx(n0, b);
      n1 = mx(n1, b - QuadReal(1));
      nE = b;
    }
    cuts[static_cast<std::size_t>(t - 1)] = {n0, n1, nE};
  }

  GeometricSpectrum cur = base;
  for (int t = 1; t <= k; ++t) {
    Cut c = cuts[static_cast<std::size_t>(t)];
    if (allow_partial) {
      const int m = cur.n;
      QuadReal l0 = cur.spec0.cutoff;
      QuadReal l1 = with1 ? smaller(l0, cur.spec1D->cutoff + QuadReal(1)) : l0;
      QuadReal lE = withE ? smaller(l1, cur.specE_TT->cutoff) : l1;
      c.c0 = reachable(m, l0, 0, c.c0);
      c.c1 = reachable(m, l1, 1, c.c1);
      c.cE = reachable(m, lE, 0, c.cE);
    }
    GeometricSpectrum next;
    next.n = cur.n + 1;
    next.normalized = true;
    next.override_hypotheses = cur.override_hypotheses;
    next.spec0 = map_functions(cur, c.c0);
    if (with1) next.spec1D = *map_one_forms(cur, c.c1, {false, true}).coclosed_part;
    if (withE) next.specE_TT = *map_einstein(cur, c.cE, {false, false, true}).tt_block;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace sinecone
