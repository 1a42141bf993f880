#pragma once

#include <vector>

#include "thetab/unipoly.hpp"

namespace thetab::orthopoly {

// Krawtchouk polynomials K^n_k, normalized by K^n_k(0) = binomial(n, k).
// Memoizes by degree; immutable after the requested maximum is built.
class KrawtchoukFamily {
 public:
  explicit KrawtchoukFamily(int n);
  int n() const { return n_; }
  const UniPoly& poly(int k);  // 0 <= k <= n

 private:
  int n_;
  std::vector<UniPoly> cache_;
};

UniPoly krawtchouk(int n, int k);

// Exact sum_{t=0}^{n} binomial(n,t) K^n_k(t) K^n_{k'}(t); zero iff k != k'.
Rational krawtchouk_gram(int n, int k, int kp);

// Normalized Jacobi polynomials P_k^{(a,a)} with a = (n-3)/2 and
// P_k(1) = 1, built by the classical three-term recurrence; for odd n the
// construction is cross-checked against Gram-Schmidt under the exact
// weight integral.
class JacobiFamily {
 public:
  explicit JacobiFamily(int n);  // n >= 2 (ambient dimension)
  int n() const { return n_; }
  const UniPoly& poly(int k);

 private:
  void extend(int k);
  int n_;
  std::vector<UniPoly> cache_;     // recurrence path
  std::vector<UniPoly> gs_basis_;  // Gram-Schmidt path (odd n only)
};

UniPoly jacobi(int n, int k);

// Exact integral of p*q*(1-t^2)^a over [-1,1]; requires odd n >= 3 so the
// weight exponent a = (n-3)/2 is a nonnegative integer.
Rational jacobi_weight_inner(int n, const UniPoly& p, const UniPoly& q);

// Gram value of the Jacobi family: zero iff k != k'. DomainError for even n.
Rational jacobi_gram(int n, int k, int kp);

}  // namespace thetab::orthopoly
