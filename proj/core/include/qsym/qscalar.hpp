#pragma once

#include <optional>
#include <string>

#include "qsym/poly.hpp"

namespace qsym {

// Element of Q(q) kept as num/den with gcd(num, den) = 1 and den monic.
// Structural equality is mathematical equality.
class QScalar {
 public:
  QScalar() : den_(1) {}
  QScalar(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  QScalar(const Rational& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  QScalar(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  static QScalar fraction(Poly num, Poly den);
  static QScalar q() { return QScalar(Poly::q_power(1)); }
  // q^k for any integer k.
  static QScalar q_power(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  // Constant value; caller checks is_constant().
  Rational constant() const { return num_.coeff(0); }

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  QScalar inverse() const;
  QScalar pow(int k) const;

  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

 private:
  QScalar(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

// Ring glue shared with the other coefficient types.
inline std::optional<QScalar> ring_inverse(const QScalar& a) {
  if (a.is_zero()) return std::nullopt;
  return a.inverse();
}

// s with q replaced by q^m.
QScalar subst_q_power(const QScalar& s, int m);

// Exact value at q = v; throws PoleAtPoint when the denominator vanishes.
Rational eval_at(const QScalar& s, const Rational& v);

// Power series expansion mod q^M; throws NotPolynomialInQ on a pole at q = 0.
QScalar reduce_mod_q(const QScalar& s, int M);

// Lowest q-exponent appearing in the Laurent expansion at q = 0
// (valuation of num minus valuation of den); s must be nonzero.
int q_valuation(const QScalar& s);

}  // namespace qsym
