#include <doctest.h>
#include <mpfr.h>

#include "sinecone/catalog.hpp"
#include "sinecone/errors.hpp"
#include "sinecone/stability.hpp"
#include "synthetic.hpp"

using namespace sinecone;

namespace {

GeometricSpectrum make_base(int n, std::vector<std::pair<QuadReal, Mult>> s0, std::vector<std::pair<QuadReal, Mult>> tt,
                            long cutoff = 400) {
  GeometricSpectrum gs;
  gs.n = n;
  s0.insert(s0.begin(), {QuadReal(0), 1});
  gs.spec0 = spectrum_from(s0, QuadReal(cutoff));
  gs.spec1D = spectrum_from({{QuadReal(n), 1}}, QuadReal(cutoff));
  gs.specE_TT = spectrum_from(tt, QuadReal(cutoff));
  return gs;
}

void check_chain(const StabilityReport& r) {
  for (const Verdict* v : {&r.eh, &r.linear, &r.tangential}) {
    if (v->strict) CHECK(v->stable);
  }
  if (r.tangential.stable) CHECK(r.linear.stable);
  if (r.linear.stable) CHECK(r.eh.stable);
  if (r.tangential.strict) CHECK(r.linear.strict);
  if (r.linear.strict) CHECK(r.eh.strict);
}

// 2n - (n/2)(sqrt(1 + 8/n) - 1) at 512 bits
double oracle_threshold(int n, mpfr_t out) {
  mpfr_t t;
  mpfr_init2(t, 512);
  mpfr_set_ui(t, 8, MPFR_RNDN);
  mpfr_div_ui(t, t, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_add_ui(t, t, 1, MPFR_RNDN);
  mpfr_sqrt(t, t, MPFR_RNDN);
  mpfr_sub_ui(t, t, 1, MPFR_RNDN);
  mpfr_mul_ui(t, t, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_div_ui(t, t, 2, MPFR_RNDN);
  mpfr_ui_sub(out, static_cast<unsigned long>(2 * n), t, MPFR_RNDN);
  mpfr_clear(t);
  return mpfr_get_d(out, MPFR_RNDN);
}

}  // namespace

TEST_CASE("cone linear threshold matches its defining formula") {
  CHECK(cone_linear_threshold(9) == make_quad(ratio(45, 2), ratio(-3, 2), 17));
  CHECK(cone_linear_threshold(9).to_decimal(4) == "16.3153");
  mpfr_t o, d;
  mpfr_inits2(512, o, d, nullptr);
  for (int n = 2; n <= 64; ++n) {
    oracle_threshold(n, o);
    QuadReal thr = cone_linear_threshold(n);
    // exact value minus oracle, through a 100-digit decimal
    mpfr_set_str(d, thr.to_decimal(100).c_str(), 10, MPFR_RNDN);
    mpfr_sub(d, d, o, MPFR_RNDN);
    CHECK(std::abs(mpfr_get_d(d, MPFR_RNDN)) < 1e-90);
  }
  mpfr_clears(o, d, nullptr);
}

TEST_CASE("n=9 product base") {
  GeometricSpectrum p9 = product_geometric(ProductMarker{4, 5, true});
  StabilityReport r = classify(p9);
  CHECK(!r.eh.stable);
  CHECK(!r.eh.strict);
  CHECK(r.physical.stable);
  REQUIRE(r.eh.witness);
  CHECK(r.eh.witness->value == QuadReal(-16));
  CHECK(!r.linear.stable);
  CHECK(!r.tangential.stable);

  CrossCheck cc = cross_check(p9, default_cone_cutoff(p9));
  CHECK(cc.consistent);
  CHECK(!cc.predicted.eh.stable);
  CHECK(cc.predicted.physical.stable);
  CHECK(!cc.direct.eh.stable);
  CHECK(cc.direct.physical.stable);
  CHECK(*cc.predicted.bounded_below);
}

TEST_CASE("n=8 product is unbounded below on the cone") {
  GeometricSpectrum p8 = product_geometric(ProductMarker{4, 4, true});
  StabilityReport pred = predict_cone(p8);
  CHECK(!*pred.bounded_below);
  CHECK(!pred.physical.stable);
  CrossCheck cc = cross_check(p8, default_cone_cutoff(p8));
  CHECK(cc.consistent);
  CHECK(!*cc.direct.bounded_below);
}

TEST_CASE("tangential boundary") {
  const int n = 5;
  GeometricSpectrum gs = make_base(n, {{QuadReal(2 * (n + 1)), 3}}, {{QuadReal(1), 2}});
  StabilityReport r = classify(gs);
  CHECK(r.tangential.stable);
  CHECK(!r.tangential.strict);
  CHECK(r.linear.strict);
  check_chain(r);
}

TEST_CASE("EH boundary at zero") {
  const int n = 4;
  GeometricSpectrum gs = make_base(n, {{QuadReal(20), 1}}, {{QuadReal(0), 1}});
  StabilityReport r = classify(gs);
  CHECK(r.eh.stable);
  CHECK(!r.eh.strict);
  CrossCheck cc = cross_check(gs, QuadReal(2 * (n + 2) + 1));
  CHECK(cc.consistent);
  CHECK(cc.direct.eh.stable);
  CHECK(!cc.direct.eh.strict);
}

TEST_CASE("threshold exactness for the cone linear notion") {
  // a base line exactly at the irrational threshold: >= holds, > fails
  const int n = 9;
  GeometricSpectrum gs = make_base(n, {{cone_linear_threshold(n), 1}}, {{QuadReal(3), 1}});
  StabilityReport p = predict_cone(gs);
  CHECK(p.linear.stable);
  CHECK(!p.linear.strict);
  GeometricSpectrum below = make_base(n, {{QuadReal(16), 1}}, {{QuadReal(3), 1}});
  CHECK(!predict_cone(below).linear.stable);
  GeometricSpectrum above = make_base(n, {{QuadReal(17), 1}}, {{QuadReal(3), 1}});
  CHECK(predict_cone(above).linear.strict);
}

TEST_CASE("relevant spectral gap skips the value n and zonal lines") {
  const int n = 5;
  GeometricSpectrum gs = make_base(n, {{QuadReal(n), 6}, {QuadReal(14), 2}}, {{QuadReal(1), 1}});
  auto p = relevant_positive_min(gs);
  REQUIRE(p);
  CHECK(p->value == QuadReal(14));
  GeometricSpectrum cone;
  cone.n = n + 1;
  GeometricSpectrum plain = make_base(n, {{QuadReal(14), 2}}, {{QuadReal(1), 1}});
  cone.spec0 = map_functions(plain, QuadReal(40));
  // n+2 comes only from the constant family
  auto c = relevant_positive_min(cone);
  REQUIRE(c);
  CHECK(c->value != QuadReal(n + 2));
}

TEST_CASE("undecidable verdicts throw") {
  const int n = 4;
  GeometricSpectrum gs = make_base(n, {}, {{QuadReal(1), 1}}, 3);
  CHECK_THROWS_AS(classify(gs), Error);
}

TEST_CASE("missing TT data") {
  CHECK_THROWS_AS(classify(sphere_geometric(3, QuadReal(50))), Error);
}

TEST_CASE("predict agrees with direct classification on random bases") {
  std::mt19937_64 rng(2024);
  int consistent = 0;
  const int total = 300;
  for (int t = 0; t < total; ++t) {
    GeometricSpectrum gs = testing::random_base(rng);
    CrossCheck cc = cross_check(gs, testing::battery_cone_cutoff(gs.n));
    if (cc.consistent) {
      ++consistent;
    } else {
      for (const auto& d : cc.discrepancies) MESSAGE("n=" << gs.n << " " << d);
    }
    check_chain(cc.predicted);
    check_chain(cc.direct);
    check_chain(classify(gs));
  }
  CHECK(consistent == total);
}
