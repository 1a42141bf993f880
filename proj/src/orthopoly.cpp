#include "thetab/orthopoly.hpp"

namespace thetab::orthopoly {

namespace {

// binomial(t, i) expanded in t: t(t-1)...(t-i+1)/i!
UniPoly falling_binomial(int i) {
  UniPoly p = UniPoly::constant(Rational(1));
  Integer fact = 1;
  for (int j = 0; j < i; ++j) {
    p = p * UniPoly({Rational(-j), Rational(1)});
    fact *= j + 1;
  }
  return Rational(Integer(1), fact) * p;
}

// binomial(n - t, m) expanded in t: (n-t)(n-t-1)...(n-t-m+1)/m!
UniPoly falling_binomial_complement(int n, int m) {
  UniPoly p = UniPoly::constant(Rational(1));
  Integer fact = 1;
  for (int j = 0; j < m; ++j) {
    p = p * UniPoly({Rational(n - j), Rational(-1)});
    fact *= j + 1;
  }
  return Rational(Integer(1), fact) * p;
}

}  // namespace

KrawtchoukFamily::KrawtchoukFamily(int n) : n_(n) {
  if (n < 1) throw DomainError("Krawtchouk family needs n >= 1");
}

const UniPoly& KrawtchoukFamily::poly(int k) {
  if (k < 0 || k > n_) throw DomainError("krawtchouk: k out of [0, n]");
  while (static_cast<int>(cache_.size()) <= k) {
    int deg = static_cast<int>(cache_.size());
    UniPoly sum;
    for (int i = 0; i <= deg; ++i) {
      UniPoly term = falling_binomial(i) * falling_binomial_complement(n_, deg - i);
      if (i % 2) term = Rational(-1) * term;
      sum += term;
    }
    cache_.push_back(std::move(sum));
  }
  return cache_[static_cast<size_t>(k)];
}

UniPoly krawtchouk(int n, int k) {
  KrawtchoukFamily fam(n);
  return fam.poly(k);
}

Rational krawtchouk_gram(int n, int k, int kp) {
  KrawtchoukFamily fam(n);
  const UniPoly& a = fam.poly(k);
  const UniPoly& b = fam.poly(kp);
  Rational sum;
  for (int t = 0; t <= n; ++t) {
    Rational tt(t);
    sum += Rational(binomial(n, t)) * a.eval(tt) * b.eval(tt);
  }
  return sum;
}

JacobiFamily::JacobiFamily(int n) : n_(n) {
  if (n < 2) throw DomainError("Jacobi family needs n >= 2");
}

const UniPoly& JacobiFamily::poly(int k) {
  if (k < 0) throw DomainError("jacobi: negative degree");
  extend(k);
  return cache_[static_cast<size_t>(k)];
}

void JacobiFamily::extend(int max_k) {
  if (cache_.empty()) cache_.push_back(UniPoly::constant(Rational(1)));
  if (max_k >= 1 && cache_.size() == 1) cache_.push_back(UniPoly({Rational(0), Rational(1)}));
  // alpha = (n-3)/2, carried as twice its value to stay in integers.
  const long a2 = n_ - 3;  // 2*alpha
  auto norm_at_one = [&](long k) {
    // P_k^{(a,a)}(1) = C(k + a, k) = prod_{j=1..k} (a + j)/j, a = a2/2
    Rational v(1);
    for (long j = 1; j <= k; ++j) v *= Rational(Integer(a2 + 2 * j), Integer(2 * j));
    return v;
  };
  while (static_cast<int>(cache_.size()) <= max_k) {
    long k = static_cast<long>(cache_.size());
    // Three-term recurrence for the Szego-normalized family, rewritten for
    // the P_k(1) = 1 normalization; valid for all k >= 2, n >= 2.
    Rational lead(Integer(2 * k * (k + a2)) * Integer(2 * k + a2 - 2), Integer(1));
    Rational ta(Integer(2 * k + a2 - 1) * Integer(2 * k + a2), Integer(1));
    ta *= Rational(Integer(2 * k + a2 - 2));
    // 2 (k + alpha - 1)^2 (2k + 2 alpha) with alpha = a2/2
    Rational tb(Integer(2 * k + a2 - 2) * Integer(2 * k + a2 - 2) * Integer(2 * k + a2), Integer(2));
    Rational nk = norm_at_one(k);
    Rational nk1 = norm_at_one(k - 1);
    Rational nk2 = norm_at_one(k - 2);
    Rational A = ta * nk1 / (lead * nk);
    Rational B = tb * nk2 / (lead * nk);
    UniPoly t({Rational(0), Rational(1)});
    UniPoly next = A * (t * cache_[static_cast<size_t>(k - 1)]) - B * cache_[static_cast<size_t>(k - 2)];
    cache_.push_back(std::move(next));

    if (n_ % 2 == 1) {
      // Independent construction: Gram-Schmidt of monomials under the
      // exact weight, renormalized at t = 1. Guards the recurrence.
      while (static_cast<long>(gs_basis_.size()) <= k) {
        long m = static_cast<long>(gs_basis_.size());
        UniPoly q = UniPoly::monomial(static_cast<int>(m), Rational(1));
        for (const auto& prev : gs_basis_) {
          Rational c = jacobi_weight_inner(n_, q, prev) / jacobi_weight_inner(n_, prev, prev);
          q -= c * prev;
        }
        Rational at_one = q.eval(Rational(1));
        gs_basis_.push_back(Rational(1) / at_one * q);
      }
      if (gs_basis_[static_cast<size_t>(k)] != cache_[static_cast<size_t>(k)])
        throw Error("jacobi: recurrence and Gram-Schmidt constructions disagree");
    }
  }
}

UniPoly jacobi(int n, int k) {
  JacobiFamily fam(n);
  return fam.poly(k);
}

Rational jacobi_weight_inner(int n, const UniPoly& p, const UniPoly& q) {
  if (n < 3 || n % 2 == 0)
    throw DomainError("jacobi_weight_inner: exact weight integral needs odd n >= 3");
  const int alpha = (n - 3) / 2;
  UniPoly prod = p * q;
  // weight (1 - t^2)^alpha expanded by the binomial theorem
  Rational total;
  for (int j = 0; j <= alpha; ++j) {
    Rational cj(binomial(alpha, j));
    if (j % 2) cj = -cj;
    for (int i = 0; i <= prod.degree(); ++i) {
      int m = i + 2 * j;
      if (m % 2) continue;  // odd powers integrate to zero
      total += cj * prod.coeff(i) * Rational(Integer(2), Integer(m + 1));
    }
  }
  return total;
}

Rational jacobi_gram(int n, int k, int kp) {
  if (n % 2 == 0) throw DomainError("jacobi_gram: exact only for odd n");
  JacobiFamily fam(n);
  UniPoly a = fam.poly(k);
  UniPoly b = fam.poly(kp);
  return jacobi_weight_inner(n, a, b);
}

}  // namespace thetab::orthopoly
