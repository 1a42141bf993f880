#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thetab/multipoly.hpp"
#include "thetab/unipoly.hpp"

namespace thetab::sphere {

// Harmonic component of a homogeneous polynomial: the unique h with
// Delta h = 0 and p - h divisible by omega.
MultiPoly harmonic_projection(const MultiPoly& p);

// p = h_d + omega h_{d-2} + omega^2 h_{d-4} + ...; returns
// [h_d, h_{d-2}, ...]. Throws NotHomogeneous.
std::vector<MultiPoly> harmonic_decompose(const MultiPoly& p);

// dim Harm_k = C(n+k-1, n-1) - C(n+k-3, n-1).
long harm_dim(int n, int k);

// Normalized integral of x^a over the unit sphere (probability measure):
// zero when any exponent is odd, otherwise an exact rational.
Rational sphere_monomial_average(const Exponents& exponents);

// Averaged inner product of two polynomials over the sphere.
Rational sphere_inner(const MultiPoly& f, const MultiPoly& g);

// Zonal kernel of Harm_k reduced to a univariate polynomial Q in the
// inner product; Q is exactly a positive multiple of jacobi(n, k) and
// Q(1) = harm_dim(n, k). Desk-scale sizes (documented k <= 6, n <= 6).
UniPoly zonal_kernel(int n, int k);

// Both sides of <omega f, g> = <f, Delta g> under the apolar inner
// product; f homogeneous of degree d-2, g of degree d.
std::pair<Rational, Rational> adjoint_check(const MultiPoly& f, const MultiPoly& g);

// Eigenvalue of the inner-product kernel K(x, y) = x.y on the degree-1
// harmonics, under the averaged measure: 1/n, verified symbolically.
Rational inner_product_kernel_eigenvalue(int n);

// Apply T_K for K(x,y) = x.y to a polynomial function on the sphere.
MultiPoly inner_product_kernel_apply(const MultiPoly& f);

// Bound-proving polynomial for the sphere: F = sum f_k P_k^{(a,a)} with
// f_k >= 0 and F + 1 <= 0 on [-1, cos_theta]; bound = 1 + F(1).
struct Certificate {
  std::string space = "sphere";
  int n = 0;
  Rational cos_theta;
  int degree = 0;
  std::vector<Rational> coeffs;  // f_0 .. f_degree
  Rational bound;
};

enum class VerifyReason {
  Valid,
  Malformed,
  NegativeCoefficient,
  BoundMismatch,
  IntervalViolation,
};

struct VerifyResult {
  bool valid = false;
  VerifyReason reason = VerifyReason::Malformed;
};

const char* verify_reason_name(VerifyReason r);

// Exact checks: coefficients nonnegative, bound = 1 + sum f_k, and
// F + 1 <= 0 on [-1, cos_theta] by Sturm analysis.
VerifyResult verify_certificate(const Certificate& cert);

// LP bound for spherical codes with minimal angle theta (c = cos theta),
// truncated at the given degree. Exchange method: exact LP on a finite
// point set, then exact location of constraint violations until the
// semi-infinite constraint is certified. The result always passes
// verify_certificate. Throws InfeasibleAtDegree when no certificate of
// this degree exists.
Certificate dgs_lp_bound(int n, const Rational& cos_theta, int degree);

// Float-mode estimate on a fixed grid (no certificate).
double dgs_lp_bound_float(int n, double cos_theta, int degree);

}  // namespace thetab::sphere
