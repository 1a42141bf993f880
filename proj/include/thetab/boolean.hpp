#pragma once

#include <cstdint>
#include <vector>

#include "thetab/lp.hpp"
#include "thetab/rational.hpp"

namespace thetab::boolean {

// Point of the Hamming cube {0,1}^n, bit i = coordinate i. n <= 64.
struct CubePoint {
  int n;
  std::uint64_t bits;
};

CubePoint cube_point(int n, std::uint64_t bits);

int hamming_distance(const CubePoint& x, const CubePoint& y);

// chi_y(x) = (-1)^{y.x}
int character_eval(const CubePoint& y, const CubePoint& x);

// Real-valued function on the cube, indexed by the binary encoding.
struct FunctionTable {
  int n;
  std::vector<Rational> values;  // length 2^n
};

FunctionTable function_table(int n, std::vector<Rational> values);

// Fourier coefficients under the 2^{-n}-normalized inner product:
// fhat(y) = 2^{-n} sum_x f(x) chi_y(x). O(n 2^n) butterfly.
FunctionTable walsh_transform(const FunctionTable& f);

// Synthesis f(x) = sum_y fhat(y) chi_y(x); exact inverse of the above.
FunctionTable walsh_inverse(const FunctionTable& fhat);

// Brute-force sum of chi_y(x) chi_y(x') over all y of Hamming norm k, for
// any fixed pair at distance t; equals the Krawtchouk value K^n_k(t).
long long zonal_sum(int n, int k, int t);

// values[k][t] = K^n_k(t) for 0 <= k, t <= n, via the three-term value
// recurrence (cheap; no polynomial construction).
std::vector<std::vector<Integer>> krawtchouk_value_table(int n);

// The Delsarte linear program for A(n, d) in natural form (variables
// f_0..f_n, objective without the constant 1).
lp::Problem<Rational> delsarte_lp(int n, int d);

// Exact optimum 1 + min sum f_k K^n_k(0); upper bound on A(n, d).
Rational delsarte_lp_bound(int n, int d);

// Float-mode counterpart (approximate; for quick sweeps).
double delsarte_lp_bound_float(int n, int d);

}  // namespace thetab::boolean
