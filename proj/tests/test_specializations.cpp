#include <gtest/gtest.h>

#include "qsym/specializations.hpp"
#include "qsym/symfun.hpp"

using namespace qsym;

namespace {

QScalar q() { return QScalar::q(); }
QScalar poly(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QScalar(Poly(std::move(r)));
}

bool all_pass(const std::vector<CheckResult>& r) {
  for (const auto& c : r)
    if (!c.passed) return false;
  return !r.empty();
}

}  // namespace

TEST(Specialize, SelfSpecializationIsFixpoint) {
  auto s = specialize(Mode::E, e_series(8));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(s.extracted_p[n], q_power(n));
  auto h = specialize(Mode::H, h_from_e(8));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(h.extracted_p[n], q_power(n));
}

TEST(Specialize, BaseChange) {
  BaseExponent m(-1);
  auto s = specialize(Mode::E, e_series(6), m);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(s.extracted_p[n], q_power(n, m));
}

TEST(Specialize, RejectsBadConstantTerm) {
  Series<QScalar> g = Series<QScalar>::constant(QScalar(2), 3);
  EXPECT_THROW(specialize(Mode::E, g), BadConstantTerm);
}

TEST(Specialize, ModeDuality) {
  // reading G as E(t) is reading 1/G(-t) as H(t)
  Series<QScalar> g = qbinomial_sum(poly({0, 0, 3}), 7);
  auto e = specialize(Mode::E, g);
  auto h = specialize(Mode::H, invert(negate_arg(g)));
  EXPECT_EQ(e.extracted_p, h.extracted_p);
}

TEST(QBinomial, ClosedFormExtraction) {
  for (const QScalar& a : {QScalar(), q(), poly({2, -1}), QScalar(Rational(1, 3)) * q() * q()}) {
    auto s = specialize(Mode::E, qbinomial_sum(a, 10));
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(s.extracted_p[n], qbinomial_power(a, n));
  }
}

TEST(QBinomial, EulerDegeneration) {
  Series<QScalar> euler(8);
  for (int n = 0; n <= 8; ++n) euler.set(n, qpochhammer(q(), n).inverse());
  EXPECT_EQ(qbinomial_sum(QScalar(), 8), euler);
  EXPECT_EQ(qbinomial_product_route(QScalar(), 8, 8), reduce_mod_q(euler, 8));
}

TEST(QBinomial, GeometricAtAEqualsQ) {
  Series<QScalar> geo(std::vector<QScalar>(9, QScalar(1)), 8);
  EXPECT_EQ(qbinomial_sum(q(), 8), geo);
  EXPECT_EQ(qbinomial_product_route(q(), 8, 10), reduce_mod_q(geo, 10));
}

TEST(QBinomial, SymbolicA) {
  QBinomialReport r = qbinomial_check(RealXPoly::x(), 8, 10);
  EXPECT_TRUE(r.sum_vs_exp);
  EXPECT_TRUE(r.sum_vs_product);
  EXPECT_TRUE(r.extraction);
}

TEST(QBinomial, ExpRouteMatchesScaledForm) {
  // e_q[(1-a)/a sum (a t)^n/(1 - q^n)] with a = 2
  const int N = 6;
  QScalar a(2);
  Series<QScalar> F(N);
  for (int n = 1; n <= N; ++n) F.set(n, (QScalar(1) - a) / a * a.pow(n) / (QScalar(1) - q().pow(n)));
  EXPECT_EQ(gessel_exp(F), qbinomial_sum(a, N));
}

TEST(Trees, ExtractedSecondPower) {
  auto s = specialize(Mode::E, q_exponential_deformation(4));
  EXPECT_EQ(s.extracted_p[2], (QScalar(1) - q()) * poly({2, 1}) / QScalar(2));
  EXPECT_EQ(s.extracted_p[1], QScalar(1));
}

TEST(Trees, QintSumAtTwo) {
  // [2] q = 2 q^0 (q-1)^0 J_2 + q^0 (q-1) J_3 with J_2 = 1, J_3 = 2 + q
  QScalar rhs = QScalar(2) + (q() - QScalar(1)) * poly({2, 1});
  EXPECT_EQ(qint(2) * q(), rhs);
}

TEST(Trees, AllIdentitiesHold) {
  auto r = tree_identities(7);
  for (const auto& c : r) EXPECT_TRUE(c.passed) << format_line(c);
  EXPECT_TRUE(all_pass(r));
}

TEST(Trees, TooLarge) { EXPECT_THROW(tree_identities(8), TooLarge); }

TEST(Trees, CorrectedReciprocalHolds) {
  for (int n = 1; n <= 7; ++n) {
    auto [lhs, rhs] = reciprocal_qint_sides(n, false);
    EXPECT_EQ(lhs, rhs) << n;
  }
}

TEST(Trees, PrintedReciprocalSignFails) {
  // the (q - 1)^{k-1} factor gives 4q^2 - q - 1 at n = 2, not 1 + q
  auto [lhs, rhs] = reciprocal_qint_sides(2, true);
  EXPECT_EQ(lhs, poly({1, 1}));
  EXPECT_EQ(rhs, poly({-1, -1, 4}));
  for (int n = 2; n <= 6; ++n) {
    auto [l, r] = reciprocal_qint_sides(n, true);
    EXPECT_FALSE(l == r) << n;
  }
}
