#include <doctest.h>

#include <algorithm>
#include <random>

#include "sinecone/catalog.hpp"
#include "sinecone/errors.hpp"
#include "sinecone/json_io.hpp"
#include "sinecone/spectra.hpp"

using namespace sinecone;

namespace {

RawLine raw(long v, Mult m, Block b, int i = 0, int j = 0) { return RawLine{QuadReal(v), m, Origin{b, i, j, m}}; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("merge combines coincident values") {
  Spectrum s = merge({raw(4, 1, Block::Function), raw(4, 3, Block::Exact), raw(10, 2, Block::Function),
                      raw(12, 5, Block::Function)},
                     QuadReal(10));
  REQUIRE(s.lines.size() == 2);
  CHECK(s.lines[0].value == QuadReal(4));
  CHECK(s.lines[0].multiplicity == 4);
  CHECK(s.lines[0].origins.size() == 2);
  CHECK(s.lines[1].multiplicity == 2);
  CHECK(s.cutoff == QuadReal(10));
  CHECK(merge({}, QuadReal(5)).empty());
}

TEST_CASE("merge keeps both Killing origins on one line") {
  const int n = 5;
  Spectrum s = merge({raw(n, 2, Block::CoclosedLambda, 1, 0), raw(n, 3, Block::CoclosedMu, 1, 0)}, QuadReal(20));
  REQUIRE(s.lines.size() == 1);
  CHECK(s.lines[0].multiplicity == 5);
  CHECK(s.lines[0].origins.size() == 2);
}

TEST_CASE("merge is order insensitive and idempotent") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> v(-5, 30), m(1, 4);
  for (int t = 0; t < 200; ++t) {
    std::vector<RawLine> in;
    for (int k = 0; k < 25; ++k) {
      long a = v(rng);
      QuadReal val = (k % 3 == 0) ? make_quad(Rational(a), 1, 2) : QuadReal(a);
      in.push_back(RawLine{val, m(rng), Origin{Block::Function, k, 0, 0}});
      in.back().origin.mult = in.back().mult;
    }
    Spectrum ref = merge(in, QuadReal(20));
    std::shuffle(in.begin(), in.end(), rng);
    Spectrum shuffled = merge(in, QuadReal(20));
    REQUIRE(ref.lines.size() == shuffled.lines.size());
    for (std::size_t i = 0; i < ref.lines.size(); ++i) {
      CHECK(ref.lines[i].value == shuffled.lines[i].value);
      CHECK(ref.lines[i].multiplicity == shuffled.lines[i].multiplicity);
      CHECK(ref.lines[i].origins == shuffled.lines[i].origins);
    }
    std::vector<RawLine> again;
    for (const auto& l : ref.lines) {
      for (const auto& o : l.origins) again.push_back(RawLine{l.value, o.mult, o});
    }
    Spectrum re = merge(again, ref.cutoff);
    REQUIRE(re.lines.size() == ref.lines.size());
    for (std::size_t i = 0; i < ref.lines.size(); ++i) {
      CHECK(re.lines[i].multiplicity == ref.lines[i].multiplicity);
      CHECK(re.lines[i].origins == ref.lines[i].origins);
    }
    check_structure(ref, "merged");
  }
}

TEST_CASE("positive_min") {
  CHECK(*positive_min(sphere_functions(3, QuadReal(20))) == QuadReal(3));
  CHECK(!positive_min(spectrum_from({{QuadReal(0), 1}}, QuadReal(10))));
  CHECK(*positive_min(spectrum_from({{QuadReal(-16), 1}, {QuadReal(0), 1}, {QuadReal(4), 2}}, QuadReal(10))) ==
        QuadReal(4));
}

TEST_CASE("equal_up_to") {
  Spectrum a = spectrum_from({{QuadReal(4), 1}}, QuadReal(10));
  Spectrum b = spectrum_from({{QuadReal(4), 2}}, QuadReal(10));
  CHECK(equal_up_to(a, a, QuadReal(10)));
  CHECK(!equal_up_to(a, b, QuadReal(10)));
  CHECK(equal_up_to(a, b, QuadReal(3)));
  CHECK(kind_of([&] { equal_up_to(a, b, QuadReal(11)); }) == ErrorKind::CutoffTooSmall);
  Spectrum s3 = sphere_functions(3, QuadReal(50));
  Spectrum s3b = sphere_functions(3, QuadReal(30));
  CHECK(equal_up_to(s3, s3b, QuadReal(30)));
  CHECK(equal_up_to(s3b, s3, QuadReal(30)));
}

TEST_CASE("union_of takes the smallest cutoff") {
  Spectrum a = spectrum_from({{QuadReal(1), 1}, {QuadReal(5), 1}}, QuadReal(10));
  Spectrum b = spectrum_from({{QuadReal(5), 2}}, QuadReal(6));
  Spectrum u = union_of({&a, &b});
  CHECK(u.cutoff == QuadReal(6));
  REQUIRE(u.lines.size() == 2);
  CHECK(u.multiplicity_of(QuadReal(5)) == 3);
}

TEST_CASE("check_structure rejects malformed spectra") {
  Spectrum s = spectrum_from({{QuadReal(1), 1}, {QuadReal(2), 1}}, QuadReal(5));
  std::swap(s.lines[0], s.lines[1]);
  CHECK(kind_of([&] { check_structure(s, "x"); }) == ErrorKind::InvariantViolation);
  Spectrum t = spectrum_from({{QuadReal(1), 1}}, QuadReal(5));
  t.cutoff = QuadReal(0);
  CHECK(kind_of([&] { check_structure(t, "x"); }) == ErrorKind::InvariantViolation);
  Spectrum u = spectrum_from({{QuadReal(1), 2}}, QuadReal(5));
  u.lines[0].multiplicity = 3;
  CHECK(kind_of([&] { check_structure(u, "x"); }) == ErrorKind::InvariantViolation);
}

TEST_CASE("validate: connectedness, Obata warning, Killing bound") {
  GeometricSpectrum gs;
  gs.n = 4;
  gs.spec0 = spectrum_from({{QuadReal(0), 1}, {QuadReal(6), 3}}, QuadReal(10));
  CHECK(validate(gs).empty());

  GeometricSpectrum two = gs;
  two.spec0 = spectrum_from({{QuadReal(0), 2}}, QuadReal(10));
  CHECK(kind_of([&] { validate(two); }) == ErrorKind::InvariantViolation);

  GeometricSpectrum low = gs;
  low.spec0 = spectrum_from({{QuadReal(0), 1}, {QuadReal(3), 1}}, QuadReal(10));
  CHECK(validate(low).size() == 1);

  GeometricSpectrum mu = gs;
  mu.spec1D = spectrum_from({{QuadReal(2), 1}}, QuadReal(10));
  CHECK(kind_of([&] { validate(mu); }) == ErrorKind::InvariantViolation);
  mu.override_hypotheses = true;
  CHECK_NOTHROW(validate(mu));

  GeometricSpectrum small = gs;
  small.n = 1;
  CHECK(kind_of([&] { validate(small); }) == ErrorKind::InvariantViolation);
}

TEST_CASE("block names round trip") {
  for (Block b : {Block::Input, Block::Function, Block::Exact, Block::CoclosedLambda, Block::CoclosedMu,
                  Block::Conformal, Block::DeltaStarLambda, Block::DeltaStarMu, Block::TTLambda, Block::TTMu,
                  Block::TTKappa}) {
    CHECK(block_from_name(block_name(b)) == b);
  }
  CHECK(!block_from_name("nope"));
}

TEST_CASE("json round trip") {
  GeometricSpectrum gs;
  gs.n = 5;
  gs.spec0 = spectrum_from({{QuadReal(0), 1}, {make_quad(ratio(11, 2), ratio(1, 2), 33), 7}}, QuadReal(40));
  gs.spec1D = spectrum_from({{QuadReal(4), 10}}, QuadReal(12));
  gs.specE_TT = spectrum_from({{QuadReal(ratio(-7, 3)), 2}}, QuadReal(ratio(5, 2)));
  GeometricSpectrum back = geometric_from_json(geometric_to_json(gs));
  CHECK(back.n == 5);
  CHECK(equal_up_to(back.spec0, gs.spec0, QuadReal(40)));
  REQUIRE(back.spec1D);
  CHECK(back.spec1D->cutoff == QuadReal(12));
  REQUIRE(back.specE_TT);
  CHECK(back.specE_TT->lines[0].value == QuadReal(ratio(-7, 3)));
  CHECK(back.specE_TT->cutoff == QuadReal(ratio(5, 2)));
}

TEST_CASE("json value forms") {
  CHECK(quad_from_json(Json(7)) == QuadReal(7));
  CHECK(quad_from_json(Json("-3/6")) == QuadReal(ratio(-1, 2)));
  CHECK(quad_from_json(Json{{"a", "1/2"}, {"b", "1"}, {"s", 8}}) == make_quad(ratio(1, 2), 2, 2));
  CHECK(parse_quad("{\"a\": 0, \"b\": 1, \"s\": 2}") == make_quad(0, 1, 2));
  CHECK(parse_quad("5/2") == QuadReal(ratio(5, 2)));
  CHECK(kind_of([] { parse_quad("{bad"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { geometric_from_json(Json{{"n", 3}}); }) == ErrorKind::ParseError);
  Json j = quad_to_json(make_quad(1, ratio(-1, 2), 17));
  CHECK(j["a"] == "1");
  CHECK(j["b"] == "-1/2");
}
