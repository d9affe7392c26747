#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace sinecone {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string rational_string(const Rational& q);
Integer floor_div(const Integer& num, const Integer& den);
Integer floor_of(const Rational& q);

// p/q in lowest terms (mpq_class(p, q) does not reduce)
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// m = factor^2 * kernel with kernel squarefree; m must be positive.
struct SquarefreeSplit {
  Integer factor;
  Integer kernel;
};
SquarefreeSplit squarefree_split(const Integer& m);

enum class Ordering { Less, Equal, Greater };

// a + b*sqrt(s), canonical: b == 0 implies s == 1, otherwise s >= 2 squarefree.
class QuadReal {
 public:
  QuadReal() : a_(0), b_(0), s_(1) {}
  QuadReal(long v) : a_(v), b_(0), s_(1) {}
  QuadReal(const Rational& r) : a_(r), b_(0), s_(1) { a_.canonicalize(); }

  static QuadReal make(const Rational& a, const Rational& b, const Rational& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& s() const { return s_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }
  int sign() const;

  QuadReal conjugate() const;
  // a^2 - b^2 s
  Rational norm() const;
  // nonnegative square root if it lies in Q or in Q(sqrt s) for this value's s
  std::optional<QuadReal> sqrt() const;

  Integer floor() const;
  Integer ceil() const;
  std::string to_decimal(int digits) const;
  std::string str() const;
  double to_double() const;

  friend QuadReal operator+(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator-(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator*(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator/(const QuadReal& x, const QuadReal& y);
  QuadReal operator-() const;
  QuadReal& operator+=(const QuadReal& y) { return *this = *this + y; }
  QuadReal& operator-=(const QuadReal& y) { return *this = *this - y; }
  QuadReal& operator*=(const QuadReal& y) { return *this = *this * y; }

  friend bool operator==(const QuadReal& x, const QuadReal& y) {
    return x.s_ == y.s_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y);

 private:
  QuadReal(Rational a, Rational b, Integer s)
      : a_(std::move(a)), b_(std::move(b)), s_(std::move(s)) {
    a_.canonicalize();
    b_.canonicalize();
  }
  static const Integer& common_radicand(const QuadReal& x, const QuadReal& y);

  Rational a_;
  Rational b_;
  Integer s_;
};

QuadReal make_quad(const Rational& a, const Rational& b, const Rational& d);
QuadReal add_same_field(const QuadReal& x, const QuadReal& y);
QuadReal mul_same_field(const QuadReal& x, const QuadReal& y);
Ordering compare(const QuadReal& x, const QuadReal& y);
std::string to_decimal(const QuadReal& x, int digits);

}  // namespace sinecone
