#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetab/rational.hpp"

namespace thetab::sphere {

using Exponents = std::vector<int>;

// Multivariate polynomial over Rational: exponent vector -> coefficient,
// zero coefficients never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars);

  static MultiPoly monomial(int nvars, const Exponents& e, const Rational& c);
  // x_1^2 + ... + x_n^2
  static MultiPoly omega(int nvars);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  // Total degree of the highest term, -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;  // zero counts as homogeneous

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Rational eval(const std::vector<Rational>& point) const;

  // Sum of second partials, exact. Degree drops by two on homogeneous input.
  MultiPoly laplacian() const;

  // Exact division by omega; throws DomainError when not divisible.
  MultiPoly divide_by_omega() const;

  std::string str() const;

 private:
  int n_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace thetab::sphere
