#pragma once

#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/report.hpp"
#include "qsym/series.hpp"
#include "qsym/xpoly.hpp"

namespace qsym {

// Discrete q-Hermite I: sum H_n(x;q) t^n/(q;q)_n = (t^2;q^2)_inf/(xt;q)_inf.

// Matrix whose determinant is H_n through the e-route: entries x or 1 by
// parity of i-j+1 on and below the diagonal, 1 - q^i on the superdiagonal.
Matrix<RealXPoly> hermite_I_e_matrix(int n);
// h-route: q^{j-1} times x (k = 1) or x^{k-2}(x^2-1), superdiagonal -(1-q^i).
Matrix<RealXPoly> hermite_I_h_matrix(int n);

RealXPoly hermite_I_e_det(int n);
RealXPoly hermite_I_h_det(int n);
// H_0..H_N from the truncated products mod q^M, M = N(N+1)/2 + 1.
std::vector<RealXPoly> hermite_I_series_route(int N);

struct HermiteRoutes {
  RealXPoly e_det, h_det, series;
  bool agree() const { return e_det == h_det && h_det == series; }
};
HermiteRoutes hermite_I_routes(int n);

// H_n(x;q), all three routes required to agree (cached).
RealXPoly hermite_I(int n);

// The 5x5 moment-type determinant for H_4 and its scalar normalizer
// q^4 (1 - q^2)^2.
Matrix<RealXPoly> hermite_H4_moment_matrix();
QScalar hermite_H4_moment_scale();

// G(t, x) = sum H_n t^n/(q;q)_n, exact.
Series<RealXPoly> hermite_I_generating(int N);
// (1-q)^{-1} (x t - t^2/[2] + x t^3/[3] - ...).
Series<RealXPoly> hermite_I_exp_argument(int N);
// [p_n] under E(t) -> G: x/(1-q) for odd n, 1/(1-q) for even n.
RealXPoly hermite_power(int n);
// [p_n^h] under H(t) -> G: x/(1-q) for n = 1, x^{n-2}(x^2-1)/(1-q) after.
RealXPoly hermite_power_h(int n);
// (x + t)/((1-q)(1-t^2)) and (x - t)/((1-q)(1 - x t)) up to t^N.
Series<RealXPoly> hermite_p_series(int N);
Series<RealXPoly> hermite_p_h_series(int N);

// Discrete q-Hermite II through [n]! Phi(h_n)(ix) over Gaussian coefficients.
Matrix<GaussXPoly> hermite_II_matrix(int n);
// Result is checked to be free of i (NonRealResult otherwise).
RealXPoly hermite_II(int n);
// q^{binom(n,2)} H~_n for n <= N from (-xt;q)_inf/(-t^2;q^2)_inf mod q^M,
// M = N(N+1)/2 + 1.
std::vector<RealXPoly> hermite_II_series_route(int N);
// sum q^{binom(n,2)} H~_n t^n/(q;q)_n, exact.
Series<RealXPoly> hermite_II_generating(int N);
// (1-q)^{-1} (x t/[1] - t^2/[2] - x t^3/[3] + t^4/[4] + ...), sign (-1)^{floor(n/2)}.
Series<RealXPoly> hermite_II_star_argument(int N);

// Classical Hermite H_n(x)/2^n as rational coefficients.
std::vector<Rational> classical_hermite_scaled(int n);
// Value at q = 1 of the coefficients of H_n(x sqrt(1-q^2); q)/(1-q^2)^{n/2}.
std::vector<Rational> hermite_I_q_to_1(int n);

// The Hermite checks run by the verification suite.
std::vector<CheckResult> hermite_checks(int n_max = 8, int n_max_ii = 6, int exp_order = 8, int star_order = 7);

}  // namespace qsym
