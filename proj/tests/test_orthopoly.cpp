#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "thetab/orthopoly.hpp"

using namespace thetab;
using namespace thetab::orthopoly;

TEST_CASE("krawtchouk low degrees") {
  for (int n : {3, 5, 8}) {
    CHECK(krawtchouk(n, 0) == UniPoly::constant(Rational(1)));
    CHECK(krawtchouk(n, 1) == UniPoly({Rational(n), Rational(-2)}));
    CHECK(krawtchouk(n, 2) ==
          UniPoly({Rational(binomial(n, 2)), Rational(-2 * n), Rational(2)}));
  }
  // explicit sum for n = 4, k = 2 at t = 1: C(1,0)C(3,2) - C(1,1)C(3,1)
  CHECK(krawtchouk(4, 2).eval(Rational(1)) == Rational(0));
  CHECK_THROWS_AS(krawtchouk(4, 5), DomainError);
  CHECK_THROWS_AS(krawtchouk(4, -1), DomainError);
}

TEST_CASE("krawtchouk normalization, degree, leading sign") {
  for (int n : {1, 2, 7, 16, 33, 64}) {
    KrawtchoukFamily fam(n);
    for (int k = 0; k <= n; ++k) {
      const UniPoly& p = fam.poly(k);
      CHECK(p.degree() == k);
      CHECK(p.eval(Rational(0)) == Rational(binomial(n, k)));
      CHECK(p.leading().sign() == (k % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("krawtchouk orthogonality") {
  CHECK(krawtchouk_gram(5, 1, 2) == Rational(0));
  CHECK(krawtchouk_gram(3, 0, 0) == Rational(8));
  CHECK(krawtchouk_gram(4, 2, 3) == Rational(0));
  for (int n : {6, 9}) {
    for (int k = 0; k <= n; ++k)
      for (int kp = 0; kp < k; ++kp) CHECK(krawtchouk_gram(n, k, kp) == Rational(0));
  }
}

TEST_CASE("jacobi low degrees") {
  for (int n : {2, 3, 4, 8, 24}) {
    CHECK(jacobi(n, 0) == UniPoly::constant(Rational(1)));
    CHECK(jacobi(n, 1) == UniPoly({Rational(0), Rational(1)}));
    CHECK(jacobi(n, 2) == UniPoly({Rational(Integer(-1), Integer(n - 1)), Rational(0),
                                   Rational(Integer(n), Integer(n - 1))}));
  }
}

TEST_CASE("jacobi normalization at one") {
  for (int n : {2, 3, 5, 12, 32}) {
    JacobiFamily fam(n);
    for (int k = 0; k <= 20; ++k) {
      CHECK(fam.poly(k).degree() == k);
      CHECK(fam.poly(k).eval(Rational(1)) == Rational(1));
    }
  }
}

TEST_CASE("jacobi n=2 is Chebyshev") {
  // P_k^(-1/2,-1/2)(cos x) = cos(k x)
  JacobiFamily fam(2);
  const UniPoly& p3 = fam.poly(3);
  for (double theta : {0.0, M_PI / 6, M_PI / 4, M_PI / 3}) {
    double lhs = p3.eval_double(std::cos(theta));
    double rhs = std::cos(3 * theta);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("jacobi gram values") {
  CHECK(jacobi_gram(3, 1, 2) == Rational(0));
  CHECK(jacobi_gram(3, 0, 0) == Rational(2));
  // n = 5: integral of t^2 (1 - t^2) dt over [-1, 1] = 4/15
  CHECK(jacobi_gram(5, 1, 1) == Rational::from_string("4/15"));
  CHECK_THROWS_AS(jacobi_gram(4, 0, 0), DomainError);
}

TEST_CASE("jacobi gram orthogonality sweep") {
  for (int n : {3, 5, 7, 9, 11, 13, 15}) {
    for (int k = 0; k <= 10; ++k)
      for (int kp = 0; kp < k; ++kp) CHECK(jacobi_gram(n, k, kp) == Rational(0));
  }
}
