#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace qsym {

using Rational = mpq_class;

// Dense polynomial in q over Q. Coefficients are stored constant term first
// with no trailing zeros, so the zero polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int k);
  static Poly q_power(int k) { return monomial(Rational(1), k); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monomial() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;
  const Rational& lead() const;
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
  // Quotient when b is known to divide *this.
  Poly divexact(const Poly& b) const;
  // Monic gcd; gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);
  Poly monic() const;

  Rational eval(const Rational& v) const;
  Poly shifted(int k) const;         // q^k * p, k >= 0
  Poly unshifted(int k) const;       // p / q^k, requires valuation >= k
  Poly compose_power(int m) const;   // p(q^m), m >= 1
  Poly reversed(int d) const;        // q^d p(1/q), d >= degree
  Poly truncated(int M) const;       // p mod q^M
  // p^{-1} mod q^M; requires p(0) != 0.
  Poly inverse_mod(int M) const;

  std::size_t hash() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace qsym
