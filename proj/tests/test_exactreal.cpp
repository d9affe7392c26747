#include <doctest.h>
#include <mpfr.h>

#include <random>

#include "sinecone/conemaps.hpp"
#include "sinecone/errors.hpp"
#include "sinecone/exactreal.hpp"

using namespace sinecone;

namespace {

QuadReal q(long a, long b, long s) { return make_quad(Rational(a), Rational(b), Rational(s)); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

// a + b sqrt(s) rounded to `digits` decimals by MPFR at 2000 bits
std::string mpfr_decimal(const QuadReal& x, int digits) {
  mpfr_t v, r, scale;
  mpfr_inits2(2000, v, r, scale, nullptr);
  mpfr_set_z(r, x.s().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(r, r, MPFR_RNDN);
  mpfr_mul_q(r, r, x.b().get_mpq_t(), MPFR_RNDN);
  mpfr_add_q(v, r, x.a().get_mpq_t(), MPFR_RNDN);
  mpfr_set_ui(scale, 10, MPFR_RNDN);
  mpfr_pow_ui(scale, scale, static_cast<unsigned long>(digits), MPFR_RNDN);
  mpfr_mul(v, v, scale, MPFR_RNDN);
  mpfr_rint(v, v, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v, MPFR_RNDN);
  mpfr_clears(v, r, scale, nullptr);
  bool neg = z < 0;
  std::string digs = neg ? mpz_class(-z).get_str() : z.get_str();
  if (digits > 0) {
    if (digs.size() <= static_cast<std::size_t>(digits)) digs.insert(0, digits + 1 - digs.size(), '0');
    digs.insert(digs.size() - digits, ".");
  }
  return (neg ? "-" : "") + digs;
}

}  // namespace

TEST_CASE("ratio and parse_rational reduce") {
  CHECK(ratio(-8, 2) == Rational(-4));
  CHECK(ratio(6, 4).get_den() == 2);
  CHECK(parse_rational("6/-4") == ratio(-3, 2));
  CHECK(parse_rational(" 12 ") == Rational(12));
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::ParseError);
  CHECK(rational_string(ratio(-9, 6)) == "-3/2");
}

TEST_CASE("floor helpers") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_of(ratio(-1, 3)) == -1);
}

TEST_CASE("squarefree split") {
  auto sp = squarefree_split(72);
  CHECK(sp.factor == 6);
  CHECK(sp.kernel == 2);
  sp = squarefree_split(1);
  CHECK(sp.kernel == 1);
  // product of two primes beyond the trial-division range, squared factor
  Integer p1("1000003"), p2("1000033");
  sp = squarefree_split(p1 * p1 * p2 * 5);
  CHECK(sp.factor == p1);
  CHECK(sp.kernel == p2 * 5);
  sp = squarefree_split(p1 * p2);
  CHECK(sp.factor == 1);
  CHECK(sp.kernel == p1 * p2);
}

TEST_CASE("make_quad canonical forms") {
  QuadReal x = make_quad(0, 1, 8);
  CHECK(x.a() == 0);
  CHECK(x.b() == 2);
  CHECK(x.s() == 2);

  x = make_quad(-4, 1, 0);
  CHECK(x.a() == -4);
  CHECK(x.b() == 0);
  CHECK(x.s() == 1);

  x = make_quad(ratio(1, 2), ratio(3, 2), ratio(4, 9));
  CHECK(x.a() == ratio(3, 2));
  CHECK(x.b() == 0);
  CHECK(x.s() == 1);

  x = make_quad(0, 1, ratio(1, 2));  // sqrt(1/2) = sqrt2 / 2
  CHECK(x.b() == ratio(1, 2));
  CHECK(x.s() == 2);

  CHECK(kind_of([] { make_quad(0, 1, -3); }) == ErrorKind::NegativeRadicand);
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 9), rad(0, 200);
  for (int t = 0; t < 2000; ++t) {
    QuadReal x = make_quad(ratio(num(rng), den(rng)), ratio(num(rng), den(rng)), ratio(rad(rng), den(rng)));
    QuadReal y = make_quad(x.a(), x.b(), Rational(x.s()));
    CHECK(x == y);
    if (x.b() == 0) CHECK(x.s() == 1);
    else CHECK(squarefree_split(x.s()).factor == 1);
  }
}

TEST_CASE("same-field arithmetic") {
  CHECK(add_same_field(QuadReal(-4), QuadReal(4)) == QuadReal(0));
  CHECK(mul_same_field(q(1, 1, 2), q(1, -1, 2)) == QuadReal(-1));
  QuadReal xi9 = xi(9, QuadReal(-16));
  CHECK(xi9 == QuadReal(-4));
  CHECK(mul_same_field(xi9 + QuadReal(4), xi9 + QuadReal(14)) == QuadReal(0));
  CHECK(kind_of([] { add_same_field(q(0, 1, 2), q(0, 1, 3)); }) == ErrorKind::MixedField);
  CHECK(kind_of([] { q(0, 1, 2) * q(0, 1, 5); }) == ErrorKind::MixedField);
  CHECK(q(1, 1, 2) / q(1, 1, 2) == QuadReal(1));
  CHECK(QuadReal(1) / q(1, 1, 2) == q(-1, 1, 2));
}

TEST_CASE("field laws on random same-field triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 6);
  const long radicands[] = {2, 3, 5, 17, 33};
  for (int t = 0; t < 1000; ++t) {
    long s = radicands[t % 5];
    auto r = [&] { return make_quad(ratio(num(rng), den(rng)), ratio(num(rng), den(rng)), Rational(s)); };
    QuadReal x = r(), y = r(), z = r();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (x.sign() != 0) CHECK((y / x) * x == y);
  }
}

TEST_CASE("compare examples") {
  CHECK(compare(QuadReal(2), q(1, 1, 2)) == Ordering::Less);
  CHECK(compare(q(1, 1, 2), QuadReal(2)) == Ordering::Greater);
  CHECK(compare(QuadReal(-16), QuadReal(hardy_bound(9))) == Ordering::Equal);
  QuadReal thr = make_quad(ratio(45, 2), ratio(-3, 2), 17);
  CHECK(compare(QuadReal(16), thr) == Ordering::Less);
  CHECK(compare(thr, thr) == Ordering::Equal);
  // cross-field
  CHECK(compare(q(0, 1, 2), q(0, 1, 3)) == Ordering::Less);
  CHECK(compare(q(1, 1, 2), q(0, 1, 5)) == Ordering::Greater);   // 2.414 vs 2.236
  CHECK(compare(q(0, 3, 2), q(0, 2, 5)) == Ordering::Less);      // 4.243 vs 4.472
  CHECK(compare(q(-1, 1, 3), q(0, -1, 7)) == Ordering::Greater);
}

TEST_CASE("floor and ceil") {
  CHECK(q(0, 1, 2).floor() == 1);
  CHECK(q(0, -1, 2).floor() == -2);
  CHECK(q(0, -1, 2).ceil() == -1);
  CHECK(QuadReal(ratio(-7, 2)).floor() == -4);
  CHECK(QuadReal(5).ceil() == 5);
  CHECK(make_quad(ratio(45, 2), ratio(-3, 2), 17).floor() == 16);
}

TEST_CASE("sqrt in field") {
  auto r = QuadReal(ratio(9, 4)).sqrt();
  REQUIRE(r);
  CHECK(*r == QuadReal(ratio(3, 2)));
  r = q(3, 2, 2).sqrt();  // (1 + sqrt2)^2
  REQUIRE(r);
  CHECK(*r == q(1, 1, 2));
  CHECK(!q(0, 1, 2).sqrt());
  CHECK(!QuadReal(-1).sqrt());
  r = QuadReal(7).sqrt();
  REQUIRE(r);
  CHECK(*r == q(0, 1, 7));
}

TEST_CASE("to_decimal examples") {
  CHECK(to_decimal(q(0, 1, 2), 5) == "1.41421");
  CHECK(to_decimal(xi(9, QuadReal(-16)), 3) == "-4.000");
  // rounding of the exact threshold; see the MPFR cross-check below
  CHECK(to_decimal(make_quad(ratio(45, 2), ratio(-3, 2), 17), 4) == "16.3153");
  CHECK(to_decimal(QuadReal(ratio(1, 8)), 2) == "0.12");  // half-even
  CHECK(to_decimal(QuadReal(ratio(3, 8)), 2) == "0.38");
  CHECK(to_decimal(QuadReal(ratio(-1, 8)), 2) == "-0.12");
  CHECK(to_decimal(QuadReal(ratio(-1, 3)), 0) == "0");
  CHECK(to_decimal(QuadReal(7), 0) == "7");
}

TEST_CASE("to_decimal agrees with MPFR") {
  CHECK(mpfr_decimal(make_quad(ratio(45, 2), ratio(-3, 2), 17), 4) == "16.3153");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 12), rad(2, 500);
  for (int t = 0; t < 3000; ++t) {
    QuadReal x = make_quad(ratio(num(rng), den(rng)), ratio(num(rng), den(rng)), Rational(rad(rng)));
    if (x.is_rational()) continue;
    int digits = static_cast<int>(t % 40);
    CHECK(to_decimal(x, digits) == mpfr_decimal(x, digits));
  }
}

TEST_CASE("compare agrees with 60-digit decimals") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 8), rad(1, 40);
  long checked = 0;
  for (int t = 0; t < 100000; ++t) {
    QuadReal x = make_quad(ratio(num(rng), den(rng)), ratio(num(rng), den(rng)), Rational(rad(rng)));
    QuadReal y = make_quad(ratio(num(rng), den(rng)), ratio(num(rng), den(rng)), Rational(rad(rng)));
    mpf_class dx(to_decimal(x, 60), 256), dy(to_decimal(y, 60), 256);
    mpf_class diff = dx - dy;
    if (abs(diff) <= mpf_class("1e-50", 256)) continue;
    Ordering expect = diff > 0 ? Ordering::Greater : Ordering::Less;
    if (compare(x, y) != expect) {
      FAIL_CHECK("compare(" << x.str() << ", " << y.str() << ")");
    }
    ++checked;
  }
  CHECK(checked > 90000);
}

TEST_CASE("spaceship operator is consistent with compare") {
  CHECK(q(1, 1, 2) > QuadReal(2));
  CHECK(q(0, 1, 3) < q(0, 1, 5));
  CHECK(QuadReal(ratio(1, 2)) == QuadReal(ratio(2, 4)));
}

TEST_CASE("rendering") {
  CHECK(q(0, 1, 2).str() == "√2");
  CHECK(make_quad(ratio(-11, 2), ratio(1, 2), 33).str() == "-11/2+1/2√33");
  CHECK(QuadReal(ratio(-3, 1)).str() == "-3");
  CHECK(q(1, -1, 2).str() == "1-√2");
}

TEST_CASE("eta inverts xi on rationals") {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 12; ++n) {
    std::uniform_int_distribution<long> num(-(n - 1) * (n - 1) * 6, 400);
    for (int t = 0; t < 200; ++t) {
      Rational x = ratio(num(rng), 24);
      if (x < hardy_bound(n)) continue;
      QuadReal y = xi(n, QuadReal(x));
      CHECK(eta(n, y) == QuadReal(x));
    }
    for (long k = 0; k < 8; ++k) CHECK(xi(n, QuadReal(k * (k + n - 1))) == QuadReal(k));
  }
}
