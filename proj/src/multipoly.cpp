#include "thetab/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "thetab/errors.hpp"

namespace thetab::sphere {

namespace {
int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

MultiPoly::MultiPoly(int nvars) : n_(nvars) {
  if (nvars < 1) throw DomainError("MultiPoly needs at least one variable");
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::omega(int nvars) {
  MultiPoly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 2;
    p.add_term(e, Rational(1));
  }
  return p;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw DomainError("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw DomainError("negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, degree_of(e));
  return deg;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int deg = degree_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) != deg) return false;
  return true;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (n_ != o.n_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (n_ != o.n_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw DomainError("variable count mismatch");
  MultiPoly r(a.n_);
  Exponents e(static_cast<size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
  MultiPoly r(p.n_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != n_) throw DomainError("evaluation point length mismatch");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) term *= point[i];
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::laplacian() const {
  MultiPoly r(n_);
  Exponents e(static_cast<size_t>(n_));
  for (const auto& [ex, c] : terms_) {
    for (size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] < 2) continue;
      e = ex;
      e[i] -= 2;
      r.add_term(e, c * Rational(static_cast<long>(ex[i])) * Rational(static_cast<long>(ex[i] - 1)));
    }
  }
  return r;
}

MultiPoly MultiPoly::divide_by_omega() const {
  // Single-divisor multivariate division; omega's leading monomial in the
  // term order is x_1^2.
  MultiPoly rem = *this;
  MultiPoly quo(n_);
  MultiPoly om = omega(n_);
  while (!rem.is_zero()) {
    // leading term in the map order (lexicographic on exponent vectors,
    // largest last)
    auto it = std::prev(rem.terms_.end());
    Exponents e = it->first;
    Rational c = it->second;
    if (e[0] < 2) throw DomainError("polynomial is not divisible by omega");
    e[0] -= 2;
    MultiPoly t = monomial(n_, e, c);
    quo += t;
    rem -= t * om;
  }
  return quo;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace thetab::sphere
