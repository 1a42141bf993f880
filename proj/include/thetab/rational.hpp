#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "thetab/errors.hpp"

namespace thetab {

using Integer = mpz_class;

// Exact rational scalar, always in canonical form: gcd(num, den) = 1,
// den > 0, zero is 0/1. Arithmetic is eager (no gmpxx expression
// templates leak out), so Rational is safe to use in generic code.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(const Integer& n) : v_(n) {}     // NOLINT
  Rational(const Integer& num, const Integer& den);

  // Parses "p/q" or "p"; result is canonicalized. Throws DomainError on
  // malformed input or zero denominator.
  static Rational from_string(const std::string& s);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  double to_double() const { return v_.get_d(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Exact binomial coefficient; 0 when k < 0 or k > n (n >= 0 required).
Integer binomial(long n, long k);

Integer floor_int(const Rational& x);
Integer ceil_int(const Rational& x);

// The rational with the smallest denominator in the closed interval
// [lo, hi] (ties among integers resolved toward zero), by continued
// fraction descent.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace thetab
