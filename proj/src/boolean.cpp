#include "thetab/boolean.hpp"

#include <bit>

#include "thetab/orthopoly.hpp"

namespace thetab::boolean {

CubePoint cube_point(int n, std::uint64_t bits) {
  if (n < 1 || n > 64) throw DomainError("cube dimension out of [1, 64]");
  if (n < 64 && (bits >> n) != 0) throw DomainError("cube point has bits beyond dimension");
  return CubePoint{n, bits};
}

int hamming_distance(const CubePoint& x, const CubePoint& y) {
  if (x.n != y.n) throw DomainError("hamming_distance: dimension mismatch");
  return std::popcount(x.bits ^ y.bits);
}

int character_eval(const CubePoint& y, const CubePoint& x) {
  if (x.n != y.n) throw DomainError("character_eval: dimension mismatch");
  return (std::popcount(y.bits & x.bits) % 2) ? -1 : 1;
}

FunctionTable function_table(int n, std::vector<Rational> values) {
  if (n < 1 || n > 26) throw DomainError("function table dimension out of [1, 26]");
  if (values.size() != (size_t{1} << n)) throw DomainError("function table length is not 2^n");
  return FunctionTable{n, std::move(values)};
}

namespace {

void butterfly(std::vector<Rational>& v) {
  size_t size = v.size();
  for (size_t len = 1; len < size; len <<= 1) {
    for (size_t i = 0; i < size; i += len << 1) {
      for (size_t j = i; j < i + len; ++j) {
        Rational a = v[j];
        Rational b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

}  // namespace

FunctionTable walsh_transform(const FunctionTable& f) {
  FunctionTable out = f;
  butterfly(out.values);
  Rational scale(Integer(1), Integer(1) << f.n);
  for (auto& x : out.values) x *= scale;
  return out;
}

FunctionTable walsh_inverse(const FunctionTable& fhat) {
  FunctionTable out = fhat;
  butterfly(out.values);
  return out;
}

long long zonal_sum(int n, int k, int t) {
  if (n < 1 || n > 30) throw DomainError("zonal_sum: n out of range");
  if (k < 0 || k > n || t < 0 || t > n) throw DomainError("zonal_sum: k or t out of [0, n]");
  // x = 0^n, x' = 1^t 0^{n-t}; chi_y(x) = 1, so the sum is over chi_y(x').
  std::uint64_t xp = (t == 0) ? 0 : ((std::uint64_t{1} << t) - 1);
  long long sum = 0;
  // enumerate all y with popcount k (Gosper's hack)
  if (k == 0) return 1;
  std::uint64_t y = (std::uint64_t{1} << k) - 1;
  std::uint64_t limit = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  while (y <= limit) {
    sum += (std::popcount(y & xp) % 2) ? -1 : 1;
    std::uint64_t c = y & (~y + 1);
    std::uint64_t r = y + c;
    if (r > limit || r < y) break;
    y = (((r ^ y) >> 2) / c) | r;
  }
  return sum;
}

std::vector<std::vector<Integer>> krawtchouk_value_table(int n) {
  // values[k][t] = K^n_k(t) by the three-term recurrence
  // (k+1) K_{k+1}(t) = (n - 2t) K_k(t) - (n - k + 1) K_{k-1}(t).
  std::vector<std::vector<Integer>> values(static_cast<size_t>(n) + 1,
                                           std::vector<Integer>(static_cast<size_t>(n) + 1));
  for (int t = 0; t <= n; ++t) {
    values[0][static_cast<size_t>(t)] = 1;
    if (n >= 1) values[1][static_cast<size_t>(t)] = n - 2 * t;
    for (int k = 1; k < n; ++k) {
      Integer next = Integer(n - 2 * t) * values[static_cast<size_t>(k)][static_cast<size_t>(t)] -
                     Integer(n - k + 1) * values[static_cast<size_t>(k - 1)][static_cast<size_t>(t)];
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
      values[static_cast<size_t>(k + 1)][static_cast<size_t>(t)] = next;
    }
  }
  return values;
}

lp::Problem<Rational> delsarte_lp(int n, int d) {
  if (n < 1 || d < 1 || d > n + 1) throw DomainError("delsarte_lp: need 1 <= d <= n + 1");
  auto values = krawtchouk_value_table(n);
  lp::Problem<Rational> p;
  p.sense = lp::Sense::Minimize;
  p.costs.resize(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) p.costs[static_cast<size_t>(k)] = Rational(binomial(n, k));
  for (int t = d; t <= n; ++t) {
    lp::Row<Rational> row;
    row.rel = lp::Relation::LessEq;
    row.rhs = Rational(-1);
    row.coeffs.resize(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      row.coeffs[static_cast<size_t>(k)] = Rational(values[static_cast<size_t>(k)][static_cast<size_t>(t)]);
    p.rows.push_back(std::move(row));
  }
  return p;
}

Rational delsarte_lp_bound(int n, int d) {
  auto p = delsarte_lp(n, d);
  if (p.rows.empty()) return Rational(1);  // d = n + 1: empty constraint set, optimum f = 0
  auto sol = lp::solve_active_set(p);
  if (sol.status != lp::Status::Optimal) throw Error("delsarte LP did not reach an optimum");
  return Rational(1) + sol.objective;
}

double delsarte_lp_bound_float(int n, int d) {
  auto p = lp::to_float_problem(delsarte_lp(n, d));
  if (p.rows.empty()) return 1.0;
  auto sol = lp::simplex_solve(p);
  if (sol.status != lp::Status::Optimal) throw Error("delsarte LP (float) did not reach an optimum");
  return 1.0 + sol.objective;
}

}  // namespace thetab::boolean
