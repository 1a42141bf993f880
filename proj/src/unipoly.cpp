#include "thetab/unipoly.hpp"

#include <sstream>

namespace thetab {

namespace {
const Rational kZero;
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw DomainError("monomial with negative degree");
  if (coeff.is_zero()) return UniPoly();
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  c.back() = coeff;
  return UniPoly(std::move(c));
}

const Rational& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::eval_double(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  std::vector<Rational> c(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  UniPoly r = a;
  if (a.degree() < b.degree()) return {UniPoly(), r};
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const Rational& lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.leading() / lead;
    q[static_cast<size_t>(shift)] = f;
    // r -= f * t^shift * b
    for (int i = 0; i <= b.degree(); ++i)
      r.c_[static_cast<size_t>(i + shift)] -= f * b.c_[static_cast<size_t>(i)];
    r.normalize();
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return UniPoly();
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    Integer n = c.numerator();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    Integer d = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);  // positive: num_gcd > 0, den_lcm > 0
  return scale * (*this);
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ' ';
    os << c_[i].str();
  }
  return os.str();
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    UniPoly r = UniPoly::divmod(a, b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 1) return p.primitive();
  UniPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive();
  return UniPoly::divmod(p, g).first.primitive();
}

}  // namespace thetab
