#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "thetab/boolean.hpp"
#include "thetab/orthopoly.hpp"

using namespace thetab;
using namespace thetab::boolean;

TEST_CASE("hamming distance") {
  CHECK(hamming_distance(cube_point(4, 0b0011), cube_point(4, 0b0011)) == 0);
  CHECK(hamming_distance(cube_point(3, 0b000), cube_point(3, 0b111)) == 3);
  CHECK(hamming_distance(cube_point(4, 0b1100), cube_point(4, 0b1010)) == 2);
  CHECK_THROWS_AS(hamming_distance(cube_point(3, 0), cube_point(4, 0)), DomainError);
}

TEST_CASE("characters") {
  for (std::uint64_t x = 0; x < 8; ++x)
    CHECK(character_eval(cube_point(3, 0), cube_point(3, x)) == 1);
  CHECK(character_eval(cube_point(2, 0b11), cube_point(2, 0b01)) == -1);
  CHECK(character_eval(cube_point(2, 0b11), cube_point(2, 0b11)) == 1);
}

TEST_CASE("walsh transform of a character is an indicator") {
  int n = 4;
  size_t size = 1u << n;
  for (std::uint64_t y = 0; y < size; ++y) {
    std::vector<Rational> vals(size);
    for (std::uint64_t x = 0; x < size; ++x)
      vals[x] = Rational(character_eval(cube_point(n, y), cube_point(n, x)));
    auto fhat = walsh_transform(function_table(n, vals));
    for (std::uint64_t z = 0; z < size; ++z)
      CHECK(fhat.values[z] == (z == y ? Rational(1) : Rational(0)));
  }
}

TEST_CASE("walsh transform of constants and deltas") {
  int n = 3;
  size_t size = 1u << n;
  auto ones = function_table(n, std::vector<Rational>(size, Rational(1)));
  auto ones_hat = walsh_transform(ones);
  for (size_t z = 0; z < size; ++z)
    CHECK(ones_hat.values[z] == (z == 0 ? Rational(1) : Rational(0)));

  std::vector<Rational> delta(size);
  delta[0] = Rational(1);
  auto delta_hat = walsh_transform(function_table(n, delta));
  Rational expect(Integer(1), Integer(8));
  for (size_t z = 0; z < size; ++z) CHECK(delta_hat.values[z] == expect);
}

TEST_CASE("walsh fast path matches the naive sum and round-trips") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int n = 1; n <= 6; ++n) {
    size_t size = size_t{1} << n;
    std::vector<Rational> vals(size);
    for (auto& v : vals) v = Rational(Integer(d(rng)), Integer(1 + (d(rng) & 3)));
    auto f = function_table(n, vals);
    auto fast = walsh_transform(f);
    auto slow = oracles::naive_walsh(f);
    CHECK(fast.values == slow.values);
    auto back = walsh_inverse(fast);
    CHECK(back.values == f.values);
  }
}

TEST_CASE("zonal sums equal Krawtchouk values") {
  CHECK(zonal_sum(5, 0, 2) == 1);
  CHECK(zonal_sum(4, 2, 0) == 6);
  CHECK(zonal_sum(4, 2, 1) == 0);
  for (int n = 1; n <= 10; ++n) {
    orthopoly::KrawtchoukFamily fam(n);
    for (int k = 0; k <= n; ++k)
      for (int t = 0; t <= n; ++t)
        CHECK(Rational(static_cast<long>(zonal_sum(n, k, t))) == fam.poly(k).eval(Rational(t)));
  }
}

TEST_CASE("character orthonormality via the transform") {
  // <chi_y, chi_z> under the 2^{-n} inner product is exactly the Walsh
  // coefficient of chi_y at z.
  for (int n = 1; n <= 6; ++n) {
    size_t size = size_t{1} << n;
    for (std::uint64_t y = 0; y < size; ++y) {
      std::vector<Rational> vals(size);
      for (std::uint64_t x = 0; x < size; ++x)
        vals[x] = Rational(character_eval(cube_point(n, y), cube_point(n, x)));
      auto fhat = walsh_transform(function_table(n, vals));
      for (std::uint64_t z = 0; z < size; ++z)
        CHECK(fhat.values[z] == (z == y ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("eigenspace dimensions sum to 2^n") {
  for (int n = 1; n <= 12; ++n) {
    Integer total = 0;
    for (int k = 0; k <= n; ++k) total += binomial(n, k);
    CHECK(total == Integer(1) << n);
  }
}

TEST_CASE("krawtchouk value recurrence matches the polynomials") {
  for (int n : {1, 2, 5, 12, 20}) {
    auto values = krawtchouk_value_table(n);
    orthopoly::KrawtchoukFamily fam(n);
    for (int k = 0; k <= n; ++k)
      for (int t = 0; t <= n; ++t)
        CHECK(Rational(values[k][t]) == fam.poly(k).eval(Rational(t)));
  }
}

TEST_CASE("delsarte bound edge cases") {
  CHECK(delsarte_lp_bound(4, 5) == Rational(1));  // complete graph
  CHECK(delsarte_lp_bound(3, 4) == Rational(1));
  // d = 1: edgeless graph, bound is the full cube size
  CHECK(delsarte_lp_bound(3, 1) == Rational(8));
  CHECK(delsarte_lp_bound(5, 1) == Rational(32));
  CHECK_THROWS_AS(delsarte_lp_bound(4, 0), DomainError);
  CHECK_THROWS_AS(delsarte_lp_bound(4, 6), DomainError);
}

TEST_CASE("delsarte d=2 gives half the cube") {
  // single-error-detecting codes: A(n, 2) = 2^{n-1}
  for (int n = 2; n <= 8; ++n) {
    Integer half = Integer(1) << (n - 1);
    CHECK(delsarte_lp_bound(n, 2) == Rational(half));
  }
}

TEST_CASE("delsarte bound for perfect codes") {
  // Hamming code: A(7, 3) = 16, tight for the LP
  CHECK(delsarte_lp_bound(7, 3) == Rational(16));
  // repetition code: A(n, n) = 2
  CHECK(delsarte_lp_bound(5, 5) == Rational(2));
}

TEST_CASE("delsarte bound is nonincreasing in d") {
  for (int n = 1; n <= 10; ++n) {
    Rational prev;
    bool first = true;
    for (int d = 1; d <= n + 1; ++d) {
      Rational cur = delsarte_lp_bound(n, d);
      if (!first) CHECK(cur <= prev);
      prev = cur;
      first = false;
    }
  }
}
