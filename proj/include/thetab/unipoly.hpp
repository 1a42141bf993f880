#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "thetab/rational.hpp"

namespace thetab {

// Univariate polynomial over Rational, coefficients ascending in degree.
// Normal form: highest stored coefficient nonzero; the zero polynomial
// stores no coefficients and has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(int degree, const Rational& coeff);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of t^i; zero beyond the stored degree.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  Rational eval(const Rational& t) const;
  double eval_double(double t) const;

  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Euclidean division: a = q*b + r with deg r < deg b. Throws DomainError
  // when b is zero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  // Scales by the inverse of the positive content so all coefficients are
  // coprime integers; sign pattern on evaluations is unchanged. Zero maps
  // to zero.
  UniPoly primitive() const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// gcd of two polynomials, made primitive (or zero if both are zero).
UniPoly poly_gcd(UniPoly a, UniPoly b);

// p / gcd(p, p'), primitive: same roots as p, all simple.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace thetab
