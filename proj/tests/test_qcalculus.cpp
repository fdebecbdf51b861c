#include <gtest/gtest.h>

#include "qsym/qcalculus.hpp"
#include "qsym/suites.hpp"
#include "qsym/symfun.hpp"

using namespace qsym;

namespace {

using S = Series<QScalar>;

S negate_arg(const S& a) { return scale_arg(a, QScalar(-1)); }

// Ordinary power; for F = c t it coincides with the divided power F^{[k]}.
S power(const S& F, int k) {
  S r = S::constant(QScalar(1), F.t_order());
  for (int i = 0; i < k; ++i) r = r * F;
  return r;
}

}  // namespace

TEST(QExponentials, Reciprocal) {
  // e_q(t) E_q(-t) = 1
  for (int m : {1, 2, -1}) {
    BaseExponent b(m);
    EXPECT_EQ(e_q_series(8, b) * negate_arg(E_q_series(8, b)), S::constant(QScalar(1), 8));
  }
}

TEST(QExponentials, InverseBase) {
  // E_psi(t) = e_{1/psi}(t)
  EXPECT_EQ(E_q_series(8), e_q_series(8, BaseExponent(-1)));
}

TEST(QComposition, MonomialPowers) {
  S F = S::t(7) * QScalar(3);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(q_bracket_power(F, k), power(F, k));
}

TEST(QComposition, ExpOfTIsExp) {
  EXPECT_EQ(gessel_exp(S::t(8)), e_q_series(8));
  EXPECT_EQ(star_exp(S::t(8)), E_q_series(8));
}

TEST(QComposition, DerivationRule) {
  // D F^{[k]} = [k] F^{[k-1]} D F
  S F = random_series(kDefaultSeed, 0, 7);
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(q_derive(q_bracket_power(F, k)), q_bracket_power(F, k - 1).truncated(6) * q_derive(F) * qint(k));
}

TEST(QComposition, RecurrenceVsPowers) {
  for (int i = 0; i < 3; ++i) {
    S F = random_series(kDefaultSeed, i, 7);
    EXPECT_EQ(gessel_exp(F), q_compose(e_q_series(7), F));
    EXPECT_EQ(star_exp(F), q_star_compose(E_q_series(7), F));
  }
}

TEST(QComposition, InverseRoundTrip) {
  for (int i = 0; i < 3; ++i) {
    S F = random_series(kDefaultSeed, i, 7);
    EXPECT_EQ(invert_gessel_exp(gessel_exp(F)), F);
    EXPECT_EQ(invert_star_exp(star_exp(F)), F);
  }
}

TEST(QComposition, StarIsInverseBase) {
  S F = random_series(kDefaultSeed, 3, 6);
  for (int m : {1, 2, -1})
    for (int k = 0; k <= 5; ++k)
      EXPECT_EQ(q_star_power(F, k, BaseExponent(m)), q_bracket_power(F, k, BaseExponent(-m)));
}

TEST(QComposition, SymmetricExponentialFormulas) {
  const int N = 6;
  Series<SymPoly> P = P_series(N);
  EXPECT_EQ(gessel_exp(-scale_arg(P, QScalar(-1))), e_series(N));
  EXPECT_EQ(star_exp(P), h_from_e(N));
  EXPECT_EQ(invert_gessel_exp(e_series(N)), -scale_arg(P, QScalar(-1)));
}

TEST(QComposition, Errors) {
  S bad = S::constant(QScalar(1), 3) + S::t(3);
  EXPECT_THROW(gessel_exp(bad), NonzeroConstantTerm);
  EXPECT_THROW(q_bracket_power(bad, 2), NonzeroConstantTerm);
  EXPECT_THROW(invert_gessel_exp(S::t(3)), BadConstantTerm);
  EXPECT_THROW(q_bracket_power(S::t(3), -1), BadIndices);
}

TEST(QProducts, ClassicalProducts) {
  S t = S::t(8);
  EXPECT_EQ(qproduct_e(t, BaseExponent{}, 8, 10), reduce_mod_q(e_q_series(8), 10));
  EXPECT_EQ(qproduct_E(t, BaseExponent{}, 8, 10), reduce_mod_q(E_q_series(8), 10));
  EXPECT_EQ(qproduct_e(t, BaseExponent(2), 6, 12), reduce_mod_q(e_q_series(6, BaseExponent(2)), 12));
}

TEST(QProducts, RandomSeriesMatchComposition) {
  for (int m : {1, 2}) {
    S F = random_series(kDefaultSeed, 1, 6);
    EXPECT_EQ(qproduct_e(F, BaseExponent(m), 6, 9), reduce_mod_q(gessel_exp(F, BaseExponent(m)), 9));
    EXPECT_EQ(qproduct_E(F, BaseExponent(m), 6, 9), reduce_mod_q(star_exp(F, BaseExponent(m)), 9));
  }
}

TEST(QProducts, NeedPositiveBase) {
  EXPECT_THROW(qproduct_e(S::t(3), BaseExponent(-1), 3, 4), BadBase);
  EXPECT_THROW(qproduct_E(S::t(3), BaseExponent{}, 0, 4), BadIndices);
}

TEST(QProducts, OneStepAndReciprocal) {
  for (int i = 0; i < 3; ++i) {
    S F = random_series(kDefaultSeed, i, 7);
    EXPECT_TRUE(verify_one_step_e(F));
    EXPECT_TRUE(verify_one_step_E(F));
    EXPECT_TRUE(verify_reciprocal(F));
  }
}

TEST(RandomSeries, Deterministic) {
  EXPECT_EQ(random_series(5, 2, 6), random_series(5, 2, 6));
  EXPECT_FALSE(random_series(5, 2, 6) == random_series(6, 2, 6));
  EXPECT_TRUE(random_series(5, 0, 6)[0].is_zero());
  EXPECT_FALSE(random_series(5, 0, 6)[1].is_zero());
}
