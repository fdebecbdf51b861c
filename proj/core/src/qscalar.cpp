#include "qsym/qscalar.hpp"

#include "qsym/error.hpp"

namespace qsym {

QScalar QScalar::fraction(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("QScalar with zero denominator");
  QScalar r(std::move(num), std::move(den), 0);
  r.normalize();
  return r;
}

QScalar QScalar::q_power(int k) {
  if (k >= 0) return QScalar(Poly::q_power(k));
  return QScalar(Poly(1), Poly::q_power(-k), 0);
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  const Rational& l = den_.lead();
  if (l != 1) {
    Rational inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
}

QScalar QScalar::operator-() const { return QScalar(-num_, den_, 0); }

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): result (a d' + c b') / (b' d), and only
  // gcd(numerator, g) can cancel
  Poly g = Poly::gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Poly b1 = den_.divexact(g);
  Poly d1 = o.den_.divexact(g);
  Poly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return *this;
  }
  Poly h = Poly::gcd(n, g);
  Poly dd = b1 * o.den_;
  if (!h.is_one()) {
    n = n.divexact(h);
    dd = dd.divexact(h);
  }
  num_ = std::move(n);
  den_ = std::move(dd);
  Rational l = den_.lead();
  if (l != 1) {
    Rational inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = QScalar();
  if (o.is_constant()) {
    num_ *= o.num_.coeff(0);
    return *this;
  }
  if (is_constant()) {
    Rational c = num_.coeff(0);
    *this = o;
    num_ *= c;
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // cross-cancel: (a/b)(c/d) with gcd(a,d) and gcd(c,b) removed
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    Poly g1 = Poly::gcd(a, d);
    if (!g1.is_one()) {
      a = a.divexact(g1);
      d = d.divexact(g1);
    }
  }
  if (!b.is_one()) {
    Poly g2 = Poly::gcd(c, b);
    if (!g2.is_one()) {
      c = c.divexact(g2);
      b = b.divexact(g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  Rational l = den_.lead();
  if (l != 1) {
    Rational inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

QScalar QScalar::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero QScalar");
  QScalar r(den_, num_, 0);
  Rational l = r.den_.lead();
  if (l != 1) {
    Rational inv = 1 / l;
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inverse(); }

QScalar QScalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  QScalar base = *this, r(1);
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

QScalar subst_q_power(const QScalar& s, int m) {
  if (m == 0) throw BadBase("substitution q -> q^0");
  if (m == 1 || s.is_constant()) return s;
  if (m > 0)
    return QScalar::fraction(s.num().compose_power(m), s.den().compose_power(m));
  // p(q^{-k}) = q^{-k deg p} rev(p)(q^k)
  int k = -m;
  Poly a = s.num().reversed(s.num().degree()).compose_power(k);
  Poly b = s.den().reversed(s.den().degree()).compose_power(k);
  int e = k * (s.den().degree() - s.num().degree());
  if (e >= 0)
    a = a.shifted(e);
  else
    b = b.shifted(-e);
  return QScalar::fraction(std::move(a), std::move(b));
}

Rational eval_at(const QScalar& s, const Rational& v) {
  Rational d = s.den().eval(v);
  if (d == 0) throw PoleAtPoint("denominator vanishes at q = " + v.get_str());
  return s.num().eval(v) / d;
}

QScalar reduce_mod_q(const QScalar& s, int M) {
  if (s.is_polynomial()) return QScalar(s.num().truncated(M));
  if (s.den().coeff(0) == 0)
    throw NotPolynomialInQ("coefficient has a pole at q = 0");
  return QScalar((s.num().truncated(M) * s.den().inverse_mod(M)).truncated(M));
}

int q_valuation(const QScalar& s) { return s.num().valuation() - s.den().valuation(); }

}  // namespace qsym
