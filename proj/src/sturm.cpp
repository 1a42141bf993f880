#include "thetab/sturm.hpp"

#include <numeric>

namespace thetab {

SturmChain::SturmChain(const UniPoly& p) {
  seq_.push_back(p.primitive());
  if (p.degree() >= 1) {
    seq_.push_back(p.derivative().primitive());
    while (seq_.back().degree() >= 1) {
      UniPoly r = UniPoly::divmod(seq_[seq_.size() - 2], seq_.back()).second;
      if (r.is_zero()) break;
      seq_.push_back((-r).primitive());
    }
  }
}

int SturmChain::variations(const Rational& x) const {
  int count = 0;
  int prev = 0;
  for (const auto& q : seq_) {
    int s = q.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

namespace {

// Distinct cut fractions in (0, 1): 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
Rational cut_fraction(int i) {
  int den = 2;
  int seen = 0;
  for (;;) {
    for (int num = 1; num < den; ++num) {
      if (std::gcd(num, den) != 1) continue;
      if (seen == i) return Rational(Integer(num), Integer(den));
      ++seen;
    }
    ++den;
  }
}

// A point strictly between lo and hi where none of the given polynomials
// vanish. Succeeds after at most sum-of-degrees + 1 candidates.
Rational cut_point(const Rational& lo, const Rational& hi, const std::vector<const UniPoly*>& avoid) {
  for (int i = 0;; ++i) {
    Rational m = lo + cut_fraction(i) * (hi - lo);
    bool ok = true;
    for (const UniPoly* q : avoid) {
      if (q->eval(m).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
}

void isolate_rec(const SturmChain& chain, const UniPoly& p, const Rational& a, const Rational& b,
                 std::vector<RootInterval>& out) {
  int n = chain.count_roots(a, b);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({a, b});
    return;
  }
  Rational m = cut_point(a, b, {&p});
  isolate_rec(chain, p, a, m, out);
  isolate_rec(chain, p, m, b, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  std::vector<RootInterval> out;
  if (p.degree() < 1 || a >= b) return out;
  SturmChain chain(p);
  isolate_rec(chain, p, a, b, out);
  return out;
}

namespace {

// Refines (lo, hi), an isolating interval for the unique root xi of g,
// until p has no root inside and nonzero values at both ends; then the
// sign of p on the whole interval (and at xi) is the sign at lo.
// Requires p(xi) != 0.
int sign_at_isolated_root(const UniPoly& p, const SturmChain& p_root_chain, const UniPoly& g,
                          const SturmChain& g_chain, Rational& lo, Rational& hi) {
  for (;;) {
    if (!p.eval(lo).is_zero() && !p.eval(hi).is_zero() && p_root_chain.count_roots(lo, hi) == 0)
      return p.eval(lo).sign();
    Rational m = cut_point(lo, hi, {&g, &p});
    if (g_chain.count_roots(lo, m) == 1)
      hi = m;
    else
      lo = m;
  }
}

std::vector<Rational> witnesses_impl(const UniPoly& p, const Rational& a, const Rational& b,
                                     bool early_exit) {
  std::vector<Rational> w;
  if (p.is_zero()) return w;
  if (a > b) throw DomainError("interval with a > b");
  if (a == b) {
    if (p.eval(a).sign() > 0) w.push_back(a);
    return w;
  }
  if (p.eval(a).sign() > 0) {
    w.push_back(a);
    if (early_exit) return w;
  }
  if (p.eval(b).sign() > 0) {
    w.push_back(b);
    if (early_exit) return w;
  }
  if (p.degree() <= 1) return w;  // extrema only at the endpoints

  // Interior local maxima are roots of p'; critical points at the
  // endpoints are already covered by the endpoint values.
  UniPoly g = squarefree_part(p.derivative());
  const UniPoly lin_a({-a, Rational(1)});
  const UniPoly lin_b({-b, Rational(1)});
  while (!g.is_zero() && g.eval(a).is_zero()) g = UniPoly::divmod(g, lin_a).first;
  while (!g.is_zero() && g.eval(b).is_zero()) g = UniPoly::divmod(g, lin_b).first;
  if (g.degree() < 1) return w;

  std::vector<RootInterval> locs = isolate_roots(g, a, b);
  if (locs.empty()) return w;

  UniPoly touch = poly_gcd(p, g);  // critical points where p itself vanishes
  SturmChain touch_chain(touch);
  SturmChain p_root_chain(squarefree_part(p));
  SturmChain g_chain(g);

  for (const auto& loc : locs) {
    if (touch.degree() >= 1 && touch_chain.count_roots(loc.lo, loc.hi) > 0) continue;
    Rational lo = loc.lo;
    Rational hi = loc.hi;
    if (sign_at_isolated_root(p, p_root_chain, g, g_chain, lo, hi) > 0) {
      // p > 0 on all of [lo, hi] after refinement.
      w.push_back((lo + hi) / Rational(2));
      if (early_exit) return w;
    }
  }
  return w;
}

}  // namespace

bool sturm_nonpositive(const UniPoly& p, const Rational& a, const Rational& b) {
  return witnesses_impl(p, a, b, /*early_exit=*/true).empty();
}

std::vector<Rational> positive_witnesses(const UniPoly& p, const Rational& a, const Rational& b) {
  return witnesses_impl(p, a, b, /*early_exit=*/false);
}

}  // namespace thetab
