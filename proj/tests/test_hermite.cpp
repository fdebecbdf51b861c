#include <gtest/gtest.h>

#include "qsym/hermite.hpp"
#include "qsym/qcalculus.hpp"
#include "qsym/render.hpp"
#include "qsym/specializations.hpp"

using namespace qsym;

namespace {

QScalar q() { return QScalar::q(); }
RealXPoly X() { return RealXPoly::x(); }
RealXPoly C(const QScalar& c) { return RealXPoly(c); }

// Three-term recurrence of the discrete q-Hermite I family,
// H_{n+1} = x H_n - q^{n-1}(1 - q^n) H_{n-1}; independent of all routes.
std::vector<RealXPoly> recurrence_I(int N) {
  std::vector<RealXPoly> h = {RealXPoly(1), X()};
  for (int n = 1; n < N; ++n)
    h.push_back(X() * h[n] - h[n - 1] * (q().pow(n - 1) * (QScalar(1) - q().pow(n))));
  return h;
}

// Discrete q-Hermite II: x H~_n = H~_{n+1} + q^{1-2n}(1 - q^n) H~_{n-1}.
std::vector<RealXPoly> recurrence_II(int N) {
  std::vector<RealXPoly> h = {RealXPoly(1), X()};
  for (int n = 1; n < N; ++n)
    h.push_back(X() * h[n] - h[n - 1] * (q().pow(1 - 2 * n) * (QScalar(1) - q().pow(n))));
  return h;
}

}  // namespace

TEST(HermiteI, SmallValues) {
  EXPECT_EQ(hermite_I(0), RealXPoly(1));
  EXPECT_EQ(hermite_I(1), X());
  EXPECT_EQ(hermite_I(2), X() * X() - C(QScalar(1) - q()));
  EXPECT_EQ(to_text(hermite_I(2)), "x^2 − (1 − q)");
}

TEST(HermiteI, ThreeRoutesAgree) {
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(hermite_I_routes(n).agree()) << n;
}

TEST(HermiteI, MatchesRecurrence) {
  auto ref = recurrence_I(9);
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(hermite_I(n), ref[n]) << n;
}

TEST(HermiteI, CofactorCrossCheck) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(det_cofactor(hermite_I_e_matrix(n)), hermite_I_e_det(n));
    EXPECT_EQ(det_cofactor(hermite_I_h_matrix(n)), hermite_I_h_det(n));
  }
}

TEST(HermiteI, MomentDeterminant) {
  RealXPoly d = det_bareiss(hermite_H4_moment_matrix());
  EXPECT_EQ(d * hermite_H4_moment_scale().inverse(), hermite_I(4));
  EXPECT_EQ(det_cofactor(hermite_H4_moment_matrix()), d);
}

TEST(HermiteI, ExponentialForm) {
  auto G = hermite_I_generating(8);
  auto F = hermite_I_exp_argument(8);
  EXPECT_EQ(gessel_exp(F), G);
  EXPECT_EQ(invert_gessel_exp(G), F);
  // t^1: H_1/(q;q)_1 = x/(1 - q)
  EXPECT_EQ(G[1], X() * (QScalar(1) - q()).inverse());
}

TEST(HermiteI, ExtractedPowers) {
  auto G = hermite_I_generating(8);
  auto e = specialize(Mode::E, G);
  auto h = specialize(Mode::H, G);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(e.extracted_p[n], hermite_power(n)) << n;
    EXPECT_EQ(h.extracted_p[n], hermite_power_h(n)) << n;
  }
  EXPECT_EQ(extracted_p_series(e), hermite_p_series(7));
  // (x - t)/((1 - q)(1 - x t)) times its denominator
  Series<RealXPoly> den = Series<RealXPoly>::constant(RealXPoly(1), 7) - Series<RealXPoly>::t(7) * X();
  Series<RealXPoly> num = Series<RealXPoly>::constant(X(), 7) - Series<RealXPoly>::t(7);
  EXPECT_EQ(extracted_p_series(h) * den * RealXPoly(QScalar(1) - q()), num);
}

TEST(HermiteI, QToOneLimit) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(hermite_I_q_to_1(n), classical_hermite_scaled(n)) << n;
  auto h4 = classical_hermite_scaled(4);  // x^4 - 3x^2 + 3/4
  EXPECT_EQ(h4, (std::vector<Rational>{Rational(3, 4), 0, -3, 0, 1}));
}

TEST(HermiteII, SmallValues) {
  EXPECT_EQ(hermite_II(0), RealXPoly(1));
  EXPECT_EQ(hermite_II(1), X());
  // q x^2 - (1 - q) at t^2 of the product, divided by q
  EXPECT_EQ(hermite_II(2), X() * X() - C((QScalar(1) - q()) / q()));
}

TEST(HermiteII, MatchesRecurrenceAndSeries) {
  auto ref = recurrence_II(7);
  auto ser = hermite_II_series_route(6);
  for (int n = 0; n <= 6; ++n) {
    RealXPoly h = hermite_II(n);
    EXPECT_EQ(h, ref[n]) << n;
    EXPECT_EQ(h * q().pow(n * (n - 1) / 2), ser[n]) << n;
  }
}

TEST(HermiteII, StarForm) {
  EXPECT_EQ(star_exp(hermite_II_star_argument(7)), hermite_II_generating(7));
}

TEST(HermiteII, GaussianDeterminantIsNotReal) {
  // the raw determinant carries i; only the normalized value is real
  GaussXPoly d = det_bareiss(hermite_II_matrix(1));
  EXPECT_THROW(real_part_checked(d), NonRealResult);
}

TEST(Hermite, AllChecksPass) {
  for (const auto& c : hermite_checks()) EXPECT_TRUE(c.passed) << format_line(c);
}
