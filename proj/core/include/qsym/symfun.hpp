#pragma once

#include <functional>
#include <string>

#include "qsym/linalg.hpp"
#include "qsym/partition.hpp"
#include "qsym/qnumbers.hpp"
#include "qsym/series.hpp"
#include "qsym/sympoly.hpp"

namespace qsym {

// E(t) = sum e_n t^n up to t^N.
Series<SymPoly> e_series(int N);
// H(t) = E(-t)^{-1}.
Series<SymPoly> h_from_e(int N);
// h_n in the e-generators (cached).
SymPoly h_poly(int n);

// [p_n^(r)] in base q^m, from the Hessenberg determinant with first
// column [k r] e_k.  Cached.
SymPoly q_power_r(int n, int r, BaseExponent m = BaseExponent{});
// [p_n] by the triangular solve of the e-Girard recurrence.  Cached.
SymPoly q_power(int n, BaseExponent m = BaseExponent{});
// [p_n] from the determinant with first column [i] e_i.
SymPoly q_power_det(int n, BaseExponent m = BaseExponent{});
// [p_n] by the triangular solve of the h-Girard recurrence.
SymPoly q_power_from_h(int n, BaseExponent m = BaseExponent{});
// [p_n^(r)] by the triangular solve of its defining relation.
SymPoly q_power_r_solve(int n, int r, BaseExponent m = BaseExponent{});
SymPoly q_power_partition(const Partition& lambda, BaseExponent m = BaseExponent{});

// Source of q-power values, so the checkers can be fed perturbed data.
using PowerSource = std::function<SymPoly(int)>;
PowerSource default_powers(BaseExponent m = BaseExponent{});
// The source with [p_k] + (leading monomial of [p_k]).
PowerSource perturbed_powers(PowerSource base, int k);

// sum_{k=1}^n (-1)^{k-1} e_{n-k} [p_k] - [n] e_n.
SymPoly girard_e_residual(int n, BaseExponent m, const PowerSource& p);
// sum_{k=1}^n h_{n-k} [p_k] psi^{n-k} - [n] h_n; `swap_weight` uses psi^k.
SymPoly girard_h_residual(int n, BaseExponent m, const PowerSource& p, bool swap_weight = false);
bool verify_girard_e(int n, BaseExponent m = BaseExponent{}, int perturb_p = 0);
bool verify_girard_h(int n, BaseExponent m = BaseExponent{}, int perturb_p = 0, bool swap_weight = false);

enum class DetForm {
  PFromE,    // [p_n]
  PrFromE,   // [p_n^(r)]
  EFromP,    // [n]! e_n
  PFromH,    // (-1)^{n-1} [p_n]
  HFromP,    // [n]! h_n
};
Matrix<SymPoly> det_matrix(DetForm form, int n, BaseExponent m = BaseExponent{}, int r = 1);
std::string det_form_name(DetForm form);

SymPoly e_det_from_p(int n, BaseExponent m = BaseExponent{});
SymPoly h_det_from_p(int n, BaseExponent m = BaseExponent{});
SymPoly p_det_from_h(int n, BaseExponent m = BaseExponent{});

// sum over partitions of n of eps * [z]^{-1} [p_lambda]; equals e_n.
SymPoly e_expansion(int n, BaseExponent m = BaseExponent{});
// sum over partitions of n of (psi^{|l|-l(l)} [z]_{1/psi})^{-1} [p_lambda]; equals h_n.
SymPoly h_expansion(int n, BaseExponent m = BaseExponent{});

// Sums over chains n-1 >= k_1 > ... > k_r = 0; equal [n]! e_n and [n]! h_n.
SymPoly lemma_sum_e(int n, BaseExponent m = BaseExponent{});
SymPoly lemma_sum_h(int n, BaseExponent m = BaseExponent{});

// P(t) = sum [p_n]/[n] t^n and p(t) = sum [p_{n+1}] t^n.
Series<SymPoly> P_series(int N, BaseExponent m = BaseExponent{});
Series<SymPoly> p_small_series(int N, BaseExponent m = BaseExponent{});

// LaTeX for a determinant, one bmatrix per call.
std::string latex_matrix(const Matrix<SymPoly>& M);

}  // namespace qsym
