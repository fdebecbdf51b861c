#include <gtest/gtest.h>

#include "qsym/error.hpp"
#include "qsym/gaussian.hpp"
#include "qsym/json_io.hpp"
#include "qsym/qnumbers.hpp"
#include "qsym/render.hpp"

using namespace qsym;

namespace {

QScalar q() { return QScalar::q(); }
QScalar poly(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QScalar(Poly(std::move(r)));
}

// q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]; independent of the product formula.
QScalar pascal(int n, int k) {
  if (k < 0 || k > n) return QScalar();
  if (k == 0 || k == n) return QScalar(1);
  return pascal(n - 1, k - 1) + QScalar::q_power(k) * pascal(n - 1, k);
}

}  // namespace

TEST(Poly, ArithmeticAndTrim) {
  Poly a(std::vector<Rational>{1, 1});     // 1 + q
  Poly b(std::vector<Rational>{-1, 1});    // -1 + q
  EXPECT_EQ(a * b, Poly(std::vector<Rational>{-1, 0, 1}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a + b).degree(), 1);
  EXPECT_EQ(Poly(std::vector<Rational>{0, 0, 3, 0}).valuation(), 2);
}

TEST(Poly, GcdIsMonic) {
  Poly a = Poly(std::vector<Rational>{-1, 0, 1});  // q^2 - 1
  Poly b = Poly(std::vector<Rational>{2, 2});      // 2 + 2q
  EXPECT_EQ(Poly::gcd(a, b), Poly(std::vector<Rational>{1, 1}));
}

TEST(QScalar, CanonicalForm) {
  QScalar x = QScalar::fraction(Poly(std::vector<Rational>{-1, 0, 1}), Poly(std::vector<Rational>{2, -2}));
  // (q^2 - 1)/(2 - 2q) = -(1 + q)/2
  EXPECT_EQ(x, poly({-1, -1}) / QScalar(2));
  EXPECT_TRUE(x.den().is_one() || x.den().lead() == 1);
  EXPECT_EQ(QScalar(1) / q() * q(), QScalar(1));
}

TEST(QScalar, DivisionByZeroThrows) {
  EXPECT_THROW(QScalar(1) / QScalar(), DivisionByZero);
  EXPECT_THROW(QScalar().inverse(), DivisionByZero);
}

TEST(QScalar, EvalAtAndPole) {
  QScalar x = poly({1, 1}) / poly({-1, 1});  // (1+q)/(q-1)
  EXPECT_EQ(eval_at(x, 3), Rational(2));
  EXPECT_THROW(eval_at(x, 1), PoleAtPoint);
  EXPECT_EQ(eval_at(qint(4) / qint(2), 1), Rational(2));
}

TEST(QScalar, ReduceModQ) {
  // 1/(1 - q) = 1 + q + q^2 + ... mod q^4
  EXPECT_EQ(reduce_mod_q(QScalar(1) / poly({1, -1}), 4), poly({1, 1, 1, 1}));
  EXPECT_THROW(reduce_mod_q(QScalar(1) / q(), 3), NotPolynomialInQ);
}

TEST(QNumbers, QintValues) {
  EXPECT_EQ(qint(0), QScalar());
  EXPECT_EQ(qint(1), QScalar(1));
  EXPECT_EQ(qint(3), poly({1, 1, 1}));
  EXPECT_EQ(qint(2, BaseExponent(2)), poly({1, 0, 1}));
  // [3]_{1/q} = 1 + q^{-1} + q^{-2}
  EXPECT_EQ(qint(3, BaseExponent(-1)), QScalar(1) + q().inverse() + q().pow(-2));
}

TEST(QNumbers, QintAtOneIsN) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(eval_at(qint(n), 1), Rational(n));
}

TEST(QNumbers, QfactorialProduct) {
  EXPECT_EQ(qfact(0), QScalar(1));
  EXPECT_EQ(qfact(3), poly({1, 1}) * poly({1, 1, 1}));
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(eval_at(qfact(n), 1), factorial(n));
}

TEST(QNumbers, QbinomMatchesPascal) {
  for (int m : {1, 2, -1})
    for (int n = 0; n <= 8; ++n)
      for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(qbinom(n, k, BaseExponent(m)), subst_q_power(pascal(n, k), m));
}

TEST(QNumbers, QbinomOutsideRangeIsZero) {
  EXPECT_TRUE(qbinom(3, 4).is_zero());
  EXPECT_TRUE(qbinom(3, -1).is_zero());
}

TEST(QNumbers, BaseExponentZeroRejected) { EXPECT_THROW(BaseExponent(0), BadBase); }

TEST(QNumbers, PochhammerOfQIsQFactorialScaled) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(qpochhammer(q(), n), qfact(n) * poly({1, -1}).pow(n));
}

TEST(QNumbers, RecognizeQint) {
  EXPECT_EQ(recognize_qint(qint(5)), 5);
  EXPECT_EQ(recognize_qint(poly({1, 2})), 0);
}

TEST(Gaussian, ImaginaryUnit) {
  GaussQ i = GaussQ::i();
  EXPECT_EQ(i * i, GaussQ(-1));
  GaussQ z(QScalar(1), q());
  EXPECT_EQ(z * z.inverse(), GaussQ(1));
  EXPECT_EQ(z * z.conj(), GaussQ(QScalar(1) + q() * q()));
}

TEST(Render, Scalars) {
  EXPECT_EQ(to_text(poly({2, 1})), "2 + q");
  EXPECT_EQ(to_text(QScalar(1) / poly({1, -1})), "1/(1 − q)");
  EXPECT_EQ(to_text(QScalar()), "0");
  EXPECT_EQ(to_text(Rational(-3, 4)), "−3/4");
}

TEST(Json, ScalarRoundTrip) {
  std::vector<QScalar> vals = {QScalar(), QScalar(1), poly({1, 1}) / poly({3, 0, -2}), q().pow(-3),
                               QScalar(Rational(mpz_class("123456789012345678901234567890"), 7))};
  for (const auto& v : vals) EXPECT_EQ(from_json<QScalar>(json::parse(to_json(v).dump())), v);
  GaussQ g(poly({1, 2}), QScalar(Rational(-1, 3)));
  EXPECT_EQ(from_json<GaussQ>(to_json(g)), g);
}

TEST(Json, BigIntegersAsStrings) {
  mpz_class big("98765432109876543210");
  json j = integer_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(integer_from_json(j), big);
  EXPECT_TRUE(integer_json(mpz_class(42)).is_number_integer());
}
