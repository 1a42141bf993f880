#pragma once

#include <vector>

#include "thetab/unipoly.hpp"

namespace thetab {

// Sturm sequence of a polynomial: p, p', then negated remainders, each
// scaled primitive (positive scaling preserves the sign pattern).
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  // Sign variations of the sequence at x (zeros skipped).
  int variations(const Rational& x) const;

  // Number of distinct roots in the open interval (a, b). Requires
  // p(a) != 0 and p(b) != 0.
  int count_roots(const Rational& a, const Rational& b) const;

 private:
  std::vector<UniPoly> seq_;
};

// Open intervals (lo, hi), each containing exactly one root of p within
// (a, b), endpoints never roots. p must be squarefree with p(a), p(b) != 0.
struct RootInterval {
  Rational lo;
  Rational hi;
};
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b);

// True iff p(t) <= 0 for every t in [a, b]. Exact: endpoint signs plus
// sign determination of p at every interior critical point via Sturm
// root isolation. Roots where p touches zero are allowed.
bool sturm_nonpositive(const UniPoly& p, const Rational& a, const Rational& b);

// Rational points of [a, b] where p is strictly positive: the endpoints
// when positive there, and one interior point per local maximum with
// positive value. Empty iff p <= 0 on [a, b].
std::vector<Rational> positive_witnesses(const UniPoly& p, const Rational& a, const Rational& b);

}  // namespace thetab
