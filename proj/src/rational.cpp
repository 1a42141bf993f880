#include "thetab/rational.hpp"

#include <cctype>
#include <ostream>

namespace thetab {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw DomainError("empty rational literal");
  mpq_class v;
  if (v.set_str(t, 10) != 0) throw DomainError("malformed rational literal: '" + s + "'");
  if (sgn(v.get_den()) == 0) throw DomainError("rational literal with zero denominator: '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer floor_int(const Rational& x) {
  Integer q;
  Integer num = x.numerator(), den = x.denominator();
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil_int(const Rational& x) {
  Integer q;
  Integer num = x.numerator(), den = x.denominator();
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw DomainError("simplest_between: empty interval");
  Integer a = ceil_int(lo);
  Integer b = floor_int(hi);
  if (a <= b) {
    // integer in range closest to zero
    if (a > 0) return Rational(a);
    if (b < 0) return Rational(b);
    return Rational(0);
  }
  // floor(lo) == floor(hi), no integer inside
  Integer f = floor_int(lo);
  Rational fl(f);
  Rational inner = simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
  return fl + Rational(1) / inner;
}

}  // namespace thetab
