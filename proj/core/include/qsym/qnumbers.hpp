#pragma once

#include "qsym/qscalar.hpp"

namespace qsym {

// Exponent m of the base change psi(q) = q^m, m != 0.
class BaseExponent {
 public:
  constexpr BaseExponent() = default;
  explicit BaseExponent(int m);
  constexpr int value() const { return m_; }
  BaseExponent inverse() const { return BaseExponent(-m_); }
  friend constexpr bool operator==(BaseExponent, BaseExponent) = default;

 private:
  int m_ = 1;
};

// psi^k = q^{mk}.
QScalar psi_power(BaseExponent m, int k);

// [n]_psi = (1 - psi^n)/(1 - psi); [0] = 0.
QScalar qint(int n, BaseExponent m = BaseExponent{});
// [n]_psi!; [0]! = 1.
QScalar qfact(int n, BaseExponent m = BaseExponent{});
// Gaussian binomial in base psi; zero outside 0 <= k <= n.
QScalar qbinom(int n, int k, BaseExponent m = BaseExponent{});
// (a; q)_n = (1 - a)(1 - qa)...(1 - q^{n-1}a).
QScalar qpochhammer(const QScalar& a, int n);
// (a; q^s)_n with the base given as q^s.
QScalar qpochhammer(const QScalar& a, int n, BaseExponent base);

// Exact binomial coefficient and factorial as rationals.
Rational binomial(int n, int k);
Rational factorial(int n);

// Integer k with qint(k, m) == s, 0 if none (k >= 2 only).
int recognize_qint(const QScalar& s, BaseExponent m = BaseExponent{});

}  // namespace qsym
