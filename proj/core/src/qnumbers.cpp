#include "qsym/qnumbers.hpp"

#include <vector>

#include "qsym/error.hpp"

namespace qsym {

BaseExponent::BaseExponent(int m) : m_(m) {
  if (m == 0) throw BadBase("base exponent m must be nonzero");
}

QScalar psi_power(BaseExponent m, int k) { return QScalar::q_power(m.value() * k); }

namespace {

// Coefficients of [n k]_q as a polynomial in q.
Poly gauss_poly(int n, int k) {
  std::vector<std::vector<mpz_class>> row(static_cast<std::size_t>(k) + 1);
  row[0] = {1};
  // row[j] holds [i j] for the current i
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      // [i j] = [i-1 j-1] + q^j [i-1 j]
      std::vector<mpz_class> next = row[j - 1];
      const auto& prev = row[j];
      if (next.size() < prev.size() + j) next.resize(prev.size() + j, 0);
      for (std::size_t t = 0; t < prev.size(); ++t) next[t + j] += prev[t];
      row[j] = std::move(next);
    }
  }
  std::vector<Rational> c;
  c.reserve(row[k].size());
  for (auto& z : row[k]) c.emplace_back(z);
  return Poly(std::move(c));
}

}  // namespace

QScalar qint(int n, BaseExponent m) {
  if (n < 0) throw BadIndices("qint of negative integer");
  if (n == 0) return QScalar();
  int a = m.value() > 0 ? m.value() : -m.value();
  std::vector<Rational> c(static_cast<std::size_t>(a) * (n - 1) + 1, Rational(0));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i) * a] = 1;
  QScalar pos{Poly(std::move(c))};
  if (m.value() > 0) return pos;
  // [n]_{q^{-a}} = q^{-a(n-1)} [n]_{q^a}
  return pos * QScalar::q_power(-a * (n - 1));
}

QScalar qfact(int n, BaseExponent m) {
  if (n < 0) throw BadIndices("qfact of negative integer");
  QScalar r(1);
  for (int i = 2; i <= n; ++i) r *= qint(i, m);
  return r;
}

QScalar qbinom(int n, int k, BaseExponent m) {
  if (k < 0 || n < 0 || k > n) return QScalar();
  if (k == 0 || k == n) return QScalar(1);
  k = std::min(k, n - k);
  int a = m.value() > 0 ? m.value() : -m.value();
  QScalar pos{gauss_poly(n, k).compose_power(a)};
  if (m.value() > 0) return pos;
  return pos * QScalar::q_power(-a * (n - k) * k);
}

QScalar qpochhammer(const QScalar& a, int n) { return qpochhammer(a, n, BaseExponent(1)); }

QScalar qpochhammer(const QScalar& a, int n, BaseExponent base) {
  if (n < 0) throw BadIndices("qpochhammer with negative length");
  QScalar r(1);
  if (a.is_zero()) return r;
  for (int i = 0; i < n; ++i) r *= QScalar(1) - psi_power(base, i) * a;
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(z);
}

Rational factorial(int n) {
  if (n < 0) return Rational(0);
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

int recognize_qint(const QScalar& s, BaseExponent m) {
  if (m.value() != 1) {
    // only the default base gets the bracket shorthand
    return 0;
  }
  if (!s.is_polynomial()) return 0;
  const auto& c = s.num().coeffs();
  if (c.size() < 2) return 0;
  for (const auto& x : c)
    if (x != 1) return 0;
  return static_cast<int>(c.size());
}

}  // namespace qsym
