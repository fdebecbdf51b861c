#include <gtest/gtest.h>

#include "qsym/json_io.hpp"
#include "qsym/linalg.hpp"
#include "qsym/render.hpp"
#include "qsym/series.hpp"
#include "qsym/symfun.hpp"

using namespace qsym;

namespace {

QScalar q() { return QScalar::q(); }
using S = Series<QScalar>;

S geometric(int N) { return S(std::vector<QScalar>(N + 1, QScalar(1)), N); }

}  // namespace

TEST(Series, ProductAndInverse) {
  S one_minus_t = S::constant(QScalar(1), 6) - S::t(6);
  EXPECT_EQ(invert(one_minus_t), geometric(6));
  EXPECT_EQ(one_minus_t * geometric(6), S::constant(QScalar(1), 6));
}

TEST(Series, InverseNeedsUnitConstant) {
  EXPECT_THROW(invert(S::t(4)), NonInvertibleConstantTerm);
  Series<SymPoly> e = e_series(3);
  Series<SymPoly> bad = e - Series<SymPoly>::constant(SymPoly(1), 3) + Series<SymPoly>::constant(SymPoly::e(1), 3);
  EXPECT_THROW(invert(bad), NonInvertibleConstantTerm);
}

TEST(Series, StrictMultiplicationChecksOrders) {
  EXPECT_THROW(mul_strict(S::t(3), S::t(4)), TruncationMismatch);
  EXPECT_NO_THROW(mul_strict(S::t(3), S::t(3)));
}

TEST(Series, QDerivative) {
  // D_q t^n = [n] t^{n-1}
  S a = S::monomial(QScalar(1), 4, 5);
  EXPECT_EQ(q_derive(a), S::monomial(qint(4), 3, 4));
  EXPECT_THROW(q_derive(S::constant(QScalar(1), 0)), TruncationMismatch);
}

TEST(Series, QDerivativeIsDividedDifference) {
  S a(std::vector<QScalar>{1, 2, q(), 3, QScalar(1) / (QScalar(1) + q())}, 4);
  // (a(qt) - a(t))/((q-1)t)
  S d = scale_arg(a, q()) - a;
  std::vector<QScalar> c;
  for (int n = 1; n <= 4; ++n) c.push_back(d[n] / (q() - QScalar(1)));
  EXPECT_EQ(q_derive(a), S(c, 3));
}

TEST(Series, QTruncation) {
  S g = geometric(3);
  S a = S(std::vector<QScalar>{QScalar(1) / (QScalar(1) - q()), q().pow(5), 0, 0}, 3, 3);
  EXPECT_EQ(a[0], QScalar(Poly(std::vector<Rational>{1, 1, 1})));
  EXPECT_TRUE(a[1].is_zero());
  // equality compares modulo the smaller q-order
  EXPECT_EQ(reduce_mod_q(g, 2), g);
}

TEST(Series, ClassicalComposition) {
  // 1/(1 - u) with u = t/(1 + t) is 1 + t
  S u = S::t(5) * invert(S::constant(QScalar(1), 5) + S::t(5));
  S r = compose_classical(geometric(5), u);
  EXPECT_EQ(r, S::constant(QScalar(1), 5) + S::t(5));
  EXPECT_THROW(compose_classical(geometric(3), geometric(3)), NonzeroConstantTerm);
}

TEST(Series, ShiftAndPowerSubstitution) {
  S g = geometric(3);
  EXPECT_EQ(shift_t(g, 2).t_order(), 5);
  EXPECT_EQ(shift_t(g, 2)[2], QScalar(1));
  S s = subst_t_power(g, 2);
  EXPECT_EQ(s.t_order(), 6);
  EXPECT_TRUE(s[1].is_zero());
  EXPECT_EQ(s[4], QScalar(1));
}

TEST(Series, SymmetricFunctionReciprocity) {
  // H(t) E(-t) = 1
  const int N = 6;
  Series<SymPoly> E = e_series(N), H = h_from_e(N);
  EXPECT_EQ(H * scale_arg(E, QScalar(-1)), Series<SymPoly>::constant(SymPoly(1), N));
  EXPECT_EQ(H[2], SymPoly::e(1) * SymPoly::e(1) - SymPoly::e(2));
}

TEST(Series, TextRendering) {
  EXPECT_EQ(to_text(S::constant(QScalar(1), 2) + S::t(2)), "(1) + (1)·t + O(t^3)");
  EXPECT_EQ(to_text(reduce_mod_q(geometric(1), 4)), "(1) + (1)·t + O(t^2) mod q^4");
}

TEST(Series, JsonRoundTrip) {
  Series<SymPoly> P = P_series(5);
  auto back = series_from_json<SymPoly>(json::parse(to_json(P).dump()));
  EXPECT_EQ(back, P);
  EXPECT_EQ(back.t_order(), 5);
  S a = reduce_mod_q(geometric(4) * QScalar(Rational(-7, 3)), 5);
  auto b = series_from_json<QScalar>(to_json(a));
  EXPECT_EQ(b.q_order(), a.q_order());
  EXPECT_EQ(b, a);
  EXPECT_THROW(series_from_json<QScalar>(json::parse(R"({"t_order": 2, "q_order": null, "coeffs": []})")), ParseError);
}

TEST(Linalg, DeterminantsAgree) {
  Matrix<QScalar> A = {{q(), 1, 2}, {3, q() * q(), QScalar(1) / (QScalar(1) + q())}, {0, -1, q()}};
  QScalar d = det_field(A);
  EXPECT_EQ(det_cofactor(A), d);
  EXPECT_EQ(det_berkowitz(A), d);
  Matrix<RealXPoly> B = {{RealXPoly::x(), RealXPoly(q())}, {RealXPoly(1), RealXPoly::x()}};
  EXPECT_EQ(det_bareiss(B), RealXPoly::x() * RealXPoly::x() - RealXPoly(q()));
  EXPECT_EQ(det_bareiss(B), det_cofactor(B));
}

TEST(Linalg, BareissPivots) {
  Matrix<RealXPoly> B = {{RealXPoly(), RealXPoly(1)}, {RealXPoly(1), RealXPoly()}};
  EXPECT_EQ(det_bareiss(B), RealXPoly(-1));
}
