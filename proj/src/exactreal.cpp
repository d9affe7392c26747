#include "sinecone/exactreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include "sinecone/errors.hpp"

namespace sinecone {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view t) {
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
  return t;
}

bool is_rational_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

// sign of a + b sqrt(s) with s >= 2 squarefree
int sign_in_field(const Rational& a, const Rational& b, const Integer& s) {
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational diff = a * a - b * b * s;
  return sgn(diff) > 0 ? sa : sb;
}

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const Integer& m, std::map<Integer, unsigned long>& out, unsigned long weight) {
  if (m == 1) return;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    factor_large(r, out, weight * 2);
    return;
  }
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) {
    out[m] += weight;
    return;
  }
  Integer d = pollard_brent(m);
  factor_large(d, out, weight);
  factor_large(Integer(m / d), out, weight);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  Integer num, den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(trim(text.substr(0, slash)), num) &&
                      parse_integer(trim(text.substr(slash + 1)), den);
  if (!ok) fail(ErrorKind::ParseError, "not a rational number: '" + std::string(text) + "'");
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) { return q.get_str(10); }

Integer floor_div(const Integer& num, const Integer& den) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

Integer floor_of(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

SquarefreeSplit squarefree_split(const Integer& m_in) {
  if (m_in <= 0) fail(ErrorKind::NegativeRadicand, "squarefree_split needs a positive integer");
  Integer m = m_in;
  Integer factor = 1, kernel = 1;

  auto strip = [&](unsigned long p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long i = 0; i < e / 2; ++i) factor *= p;
    if (e % 2) kernel *= p;
  };

  strip(2);
  for (unsigned long p = 3; p <= 1000000; p += 2) {
    if (m == 1) break;
    if (Integer(p) * p > m) break;
    strip(p);
  }
  if (m > 1) {
    if (Integer(1000000) * 1000000 > m) {
      // no factor up to sqrt(m) remained, so m is prime
      kernel *= m;
    } else {
      std::map<Integer, unsigned long> primes;
      factor_large(m, primes, 1);
      for (const auto& [p, e] : primes) {
        for (unsigned long i = 0; i < e / 2; ++i) factor *= p;
        if (e % 2) kernel *= p;
      }
    }
  }
  return {factor, kernel};
}

QuadReal QuadReal::make(const Rational& a, const Rational& b, const Rational& d) {
  if (d < 0) fail(ErrorKind::NegativeRadicand, "radicand " + rational_string(d) + " is negative");
  if (b == 0 || d == 0) return QuadReal(a);
  // sqrt(p/q) = sqrt(p*q)/q
  Integer pq = d.get_num() * d.get_den();
  SquarefreeSplit sp = squarefree_split(pq);
  Rational coeff = b * Rational(sp.factor, d.get_den());
  coeff.canonicalize();
  if (sp.kernel == 1) return QuadReal(Rational(a + coeff));
  return QuadReal(a, coeff, sp.kernel);
}

QuadReal make_quad(const Rational& a, const Rational& b, const Rational& d) {
  return QuadReal::make(a, b, d);
}

const Integer& QuadReal::common_radicand(const QuadReal& x, const QuadReal& y) {
  if (x.b_ == 0) return y.s_;
  if (y.b_ == 0) return x.s_;
  if (x.s_ != y.s_) {
    fail(ErrorKind::MixedField,
         "arithmetic across fields Q(sqrt " + x.s_.get_str() + ") and Q(sqrt " + y.s_.get_str() + ")");
  }
  return x.s_;
}

QuadReal operator+(const QuadReal& x, const QuadReal& y) {
  const Integer& s = QuadReal::common_radicand(x, y);
  Rational b = x.b_ + y.b_;
  if (b == 0) return QuadReal(Rational(x.a_ + y.a_));
  return QuadReal(x.a_ + y.a_, b, s);
}

QuadReal operator-(const QuadReal& x, const QuadReal& y) { return x + (-y); }

QuadReal QuadReal::operator-() const {
  if (b_ == 0) return QuadReal(Rational(-a_));
  return QuadReal(-a_, -b_, s_);
}

QuadReal operator*(const QuadReal& x, const QuadReal& y) {
  const Integer& s = QuadReal::common_radicand(x, y);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * s;
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  if (b == 0) return QuadReal(a);
  return QuadReal(a, b, s);
}

QuadReal operator/(const QuadReal& x, const QuadReal& y) {
  if (y.b_ == 0) {
    if (y.a_ == 0) throw std::domain_error("division by zero");
    if (x.b_ == 0) return QuadReal(Rational(x.a_ / y.a_));
    return QuadReal(x.a_ / y.a_, x.b_ / y.a_, x.s_);
  }
  QuadReal num = x * y.conjugate();
  Rational n = y.norm();
  if (num.b_ == 0) return QuadReal(Rational(num.a_ / n));
  return QuadReal(num.a_ / n, num.b_ / n, num.s_);
}

QuadReal add_same_field(const QuadReal& x, const QuadReal& y) { return x + y; }
QuadReal mul_same_field(const QuadReal& x, const QuadReal& y) { return x * y; }

int QuadReal::sign() const { return b_ == 0 ? sgn(a_) : sign_in_field(a_, b_, s_); }

QuadReal QuadReal::conjugate() const {
  if (b_ == 0) return *this;
  return QuadReal(a_, -b_, s_);
}

Rational QuadReal::norm() const { return a_ * a_ - b_ * b_ * s_; }

std::optional<QuadReal> QuadReal::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (b_ == 0) return make_quad(0, 1, a_);
  // (p + q sqrt s)^2 = p^2 + q^2 s + 2pq sqrt s
  Rational r;
  if (!is_rational_square(norm(), r)) return std::nullopt;
  for (const Rational& p2 : {Rational((a_ + r) / 2), Rational((a_ - r) / 2)}) {
    Rational p;
    if (p2 <= 0 || !is_rational_square(p2, p)) continue;
    Rational q = b_ / (2 * p);
    QuadReal root(p, q, s_);
    if (root.sign() < 0) root = -root;
    return root;
  }
  return std::nullopt;
}

Integer QuadReal::floor() const {
  if (b_ == 0) return floor_of(a_);
  Integer d;
  mpz_lcm(d.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  Integer p = a_.get_num() * (d / a_.get_den());
  Integer q = b_.get_num() * (d / b_.get_den());
  Integer q2s = q * q * s_;
  Integer t;
  mpz_sqrt(t.get_mpz_t(), q2s.get_mpz_t());
  // q^2 s is never a perfect square here, so sqrt(q^2 s) lies strictly in (t, t+1)
  if (q > 0) return floor_div(p + t, d);
  return floor_div(p - t - 1, d);
}

Integer QuadReal::ceil() const { return -((-*this).floor()); }

std::string QuadReal::to_decimal(int digits) const {
  if (digits < 0 || digits > 1000) throw std::invalid_argument("digits must lie in [0, 1000]");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  QuadReal v = *this * QuadReal(Rational(scale));
  Integer rounded;
  if (v.b_ == 0) {
    Integer f = floor_of(v.a_);
    Rational frac = v.a_ - f;
    int c = cmp(frac, ratio(1, 2));
    bool up = c > 0 || (c == 0 && mpz_odd_p(f.get_mpz_t()));
    rounded = up ? Integer(f + 1) : f;
  } else {
    rounded = (v + QuadReal(ratio(1, 2))).floor();
  }
  bool negative = rounded < 0;
  Integer mag = abs(rounded);
  std::string body = mag.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

std::string QuadReal::str() const {
  if (b_ == 0) return rational_string(a_);
  std::string root = "√" + s_.get_str();
  Rational mag = abs(b_);
  std::string coeff = mag == 1 ? "" : rational_string(mag);
  std::string irr = coeff + root;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + irr;
  return rational_string(a_) + (b_ < 0 ? "-" : "+") + irr;
}

double QuadReal::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(s_.get_d());
}

Ordering compare(const QuadReal& x, const QuadReal& y) {
  int sg;
  if (x.b() == 0 || y.b() == 0 || x.s() == y.s()) {
    sg = (x - y).sign();
  } else {
    // L - R with L = A + b1 sqrt s1 and R = b2 sqrt s2
    Rational a = x.a() - y.a();
    int sl = sign_in_field(a, x.b(), x.s());
    int sr = sgn(y.b());
    if (sl >= 0 && sr < 0) {
      sg = 1;
    } else if (sl <= 0 && sr > 0) {
      sg = -1;
    } else {
      // same sign: compare squares, L^2 - R^2 lies in Q(sqrt s1)
      Rational ra = a * a + x.b() * x.b() * x.s() - y.b() * y.b() * y.s();
      Rational rb = 2 * a * x.b();
      int t = sign_in_field(ra, rb, x.s());
      sg = sl > 0 ? t : -t;
    }
  }
  return sg < 0 ? Ordering::Less : (sg > 0 ? Ordering::Greater : Ordering::Equal);
}

std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y) {
  switch (compare(x, y)) {
    case Ordering::Less: return std::strong_ordering::less;
    case Ordering::Greater: return std::strong_ordering::greater;
    default: return std::strong_ordering::equal;
  }
}

std::string to_decimal(const QuadReal& x, int digits) { return x.to_decimal(digits); }

}  // namespace sinecone
