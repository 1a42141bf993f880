// Test-side oracles, independent of the implementation paths they check.
#pragma once

#include <optional>
#include <vector>

#include "thetab/boolean.hpp"
#include "thetab/linalg.hpp"
#include "thetab/lp.hpp"

namespace oracles {

using thetab::Rational;
using thetab::RatMatrix;
using thetab::RatVector;

// Brute-force LP optimum: enumerate every vertex candidate (each choice of
// n active constraints among rows-as-equalities and x_j = 0), keep the
// feasible ones, and take the best objective. Exponential; tiny LPs only.
inline std::optional<Rational> enumerate_lp_optimum(const thetab::lp::Problem<Rational>& p) {
  using namespace thetab;
  const size_t n = p.num_vars();
  const size_t m = p.rows.size();
  const size_t total = n + m;

  std::optional<Rational> best;
  std::vector<int> pick(total, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), 1);
  std::sort(pick.begin(), pick.end());

  auto feasible = [&](const RatVector& x) {
    for (const auto& v : x)
      if (v.sign() < 0) return false;
    for (const auto& row : p.rows) {
      Rational lhs;
      for (size_t j = 0; j < n; ++j) lhs += row.coeffs[j] * x[j];
      switch (row.rel) {
        case lp::Relation::LessEq:
          if (lhs > row.rhs) return false;
          break;
        case lp::Relation::GreaterEq:
          if (lhs < row.rhs) return false;
          break;
        case lp::Relation::Eq:
          if (lhs != row.rhs) return false;
          break;
      }
    }
    return true;
  };

  do {
    RatMatrix A;
    RatVector b;
    for (size_t i = 0; i < total; ++i) {
      if (!pick[i]) continue;
      if (i < n) {
        RatVector row(n);
        row[i] = Rational(1);
        A.push_back(std::move(row));
        b.push_back(Rational(0));
      } else {
        A.push_back(p.rows[i - n].coeffs);
        b.push_back(p.rows[i - n].rhs);
      }
    }
    RatVector x;
    try {
      x = solve_linear(A, b);
    } catch (const SingularMatrix&) {
      continue;
    }
    if (!feasible(x)) continue;
    Rational obj;
    for (size_t j = 0; j < n; ++j) obj += p.costs[j] * x[j];
    if (!best) {
      best = obj;
    } else if (p.sense == lp::Sense::Minimize ? (obj < *best) : (obj > *best)) {
      best = obj;
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

// Quadratic-time Walsh transform, straight from the definition.
inline thetab::boolean::FunctionTable naive_walsh(const thetab::boolean::FunctionTable& f) {
  using namespace thetab;
  size_t size = f.values.size();
  boolean::FunctionTable out{f.n, std::vector<Rational>(size)};
  Rational scale(thetab::Integer(1), thetab::Integer(1) << f.n);
  for (size_t y = 0; y < size; ++y) {
    Rational acc;
    for (size_t x = 0; x < size; ++x) {
      int chi = boolean::character_eval(boolean::cube_point(f.n, y), boolean::cube_point(f.n, x));
      acc += (chi > 0) ? f.values[x] : -f.values[x];
    }
    out.values[y] = scale * acc;
  }
  return out;
}

}  // namespace oracles
