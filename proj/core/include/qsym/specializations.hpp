#pragma once

#include <string>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/oracle.hpp"
#include "qsym/qcalculus.hpp"
#include "qsym/report.hpp"
#include "qsym/series.hpp"

namespace qsym {

// A concrete series read as the image of E(t) (mode E: e_n -> a_n) or of
// H(t) (mode H: h_n -> a_n).
enum class Mode { E, H };

template <CoefficientRing C>
struct Specialization {
  Mode mode = Mode::E;
  BaseExponent base;
  Series<C> g;
  // extracted_p[n] for 1 <= n <= N; index 0 is unused and zero.
  std::vector<C> extracted_p;

  int order() const { return g.t_order(); }
};

namespace detail {

template <CoefficientRing C>
C psi_c(BaseExponent m, int k) {
  return C(psi_power(m, k));
}

// Mode E: sum_{k=1}^n (-1)^{k-1} a_{n-k} p_k - [n] a_n.
// Mode H: sum_{k=1}^n a_{n-k} p_k psi^{n-k} - [n] a_n.
template <CoefficientRing C>
C defining_residual(Mode mode, const Series<C>& g, const std::vector<C>& p, int n, BaseExponent m) {
  C s = -(g[n] * C(qint(n, m)));
  for (int k = 1; k <= n; ++k) {
    C t = g[n - k] * p[k];
    if (mode == Mode::E) s = (k % 2 == 1) ? s + t : s - t;
    else s = s + t * psi_c<C>(m, n - k);
  }
  return s;
}

}  // namespace detail

template <CoefficientRing C>
bool verify_defining_relation(const Specialization<C>& s) {
  const auto& M = s.g.q_order();
  for (int n = 1; n <= s.order(); ++n) {
    C r = detail::defining_residual(s.mode, s.g, s.extracted_p, n, s.base);
    if (M) r = reduce_mod_q(r, *M);
    if (!r.is_zero()) return false;
  }
  return true;
}

// Solves the Girard recurrences for the images of [p_n] (mode E) or
// [p_n^h] (mode H).  The leading coefficient is a sign, so no division.
template <CoefficientRing C>
Specialization<C> specialize(Mode mode, const Series<C>& g, BaseExponent m = BaseExponent{}) {
  if (!(g[0] == C(QScalar(1)))) throw BadConstantTerm("specialized series must start with 1");
  const int N = g.t_order();
  Specialization<C> s{mode, m, g, std::vector<C>(static_cast<std::size_t>(N) + 1, C(QScalar()))};
  for (int n = 1; n <= N; ++n) {
    // the k = n term is p_n itself (times 1 or (-1)^{n-1})
    C r = detail::defining_residual(mode, g, s.extracted_p, n, m);
    C p = -r;
    if (mode == Mode::E && n % 2 == 0) p = r;
    if (g.q_order()) p = reduce_mod_q(p, *g.q_order());
    s.extracted_p[n] = std::move(p);
  }
  if (!verify_defining_relation(s)) throw std::logic_error("specialize: extraction fails its defining relation");
  return s;
}

// p(t) = sum_{n >= 0} [p_{n+1}] t^n, up to t^{N-1}.
template <CoefficientRing C>
Series<C> extracted_p_series(const Specialization<C>& s) {
  const int N = s.order();
  if (N < 1) throw BadIndices("need t-order >= 1");
  std::vector<C> c(s.extracted_p.begin() + 1, s.extracted_p.end());
  return Series<C>(std::move(c), N - 1, s.g.q_order());
}

// P(t) = sum [p_n]/[n] t^n from a [p_n] sequence (index 0 ignored).
template <CoefficientRing C>
Series<C> P_from_powers(const std::vector<C>& p, int N, BaseExponent m = BaseExponent{}) {
  Series<C> r(N);
  for (int n = 1; n <= N; ++n) r.set(n, p.at(n) * C(qint(n, m).inverse()));
  return r;
}

// Series with the argument negated, a(-t).
template <CoefficientRing C>
Series<C> negate_arg(const Series<C>& a) {
  return scale_arg(a, QScalar(-1));
}

// ----------------------------------------------------------------------
// q-binomial theorem

// (a; q)_n over the coefficient ring.
template <CoefficientRing C>
C qpochhammer_c(const C& a, int n) {
  C r(QScalar(1));
  for (int k = 0; k < n; ++k) r = r * (C(QScalar(1)) - a * C(QScalar::q_power(k)));
  return r;
}

// sum (a;q)_n/(q;q)_n t^n, exact.
template <CoefficientRing C>
Series<C> qbinomial_sum(const C& a, int N) {
  Series<C> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, qpochhammer_c(a, n) * C(qpochhammer(QScalar::q(), n).inverse()));
  return s;
}

// Closed form [p_n] = (-a)^{n-1} (1 - a)/(1 - q).
template <CoefficientRing C>
C qbinomial_power(const C& a, int n) {
  C r(QScalar(1) / (QScalar(1) - QScalar::q()));
  r = r * (C(QScalar(1)) - a);
  for (int k = 1; k < n; ++k) r = -(r * a);
  return r;
}

// e_q[-P(-t)] built from the closed-form [p_n].
template <CoefficientRing C>
Series<C> qbinomial_exp_route(const C& a, int N) {
  std::vector<C> p(static_cast<std::size_t>(N) + 1, C(QScalar()));
  for (int n = 1; n <= N; ++n) p[n] = qbinomial_power(a, n);
  return gessel_exp(-negate_arg(P_from_powers(p, N)));
}

// prod_{k<M} (1 - a q^k t)/(1 - q^k t) mod (q^M, t^{N+1}).
template <CoefficientRing C>
Series<C> qbinomial_product_route(const C& a, int N, int M) {
  Series<C> acc = Series<C>::constant(C(QScalar(1)), N);
  acc.set_q_order(M);
  for (int k = 0; k < M; ++k) {
    QScalar qk = QScalar::q_power(k);
    Series<C> num = Series<C>::constant(C(QScalar(1)), N);
    num.set(1, -(a * C(qk)));
    Series<C> den_inv(N, M);
    for (int j = 0; j <= N; ++j) den_inv.set(j, C(qk.pow(j)));
    acc = acc * num * den_inv;
  }
  return acc;
}

struct QBinomialReport {
  bool sum_vs_exp = false;
  bool sum_vs_product = false;
  bool extraction = false;  // specialize(E, sum) reproduces the closed form
  bool all() const { return sum_vs_exp && sum_vs_product && extraction; }
};

template <CoefficientRing C>
QBinomialReport qbinomial_check(const C& a, int N, int M) {
  QBinomialReport r;
  Series<C> sum = qbinomial_sum(a, N);
  r.sum_vs_exp = reduce_mod_q(sum, M) == reduce_mod_q(qbinomial_exp_route(a, N), M);
  r.sum_vs_product = reduce_mod_q(sum, M) == qbinomial_product_route(a, N, M);
  auto s = specialize(Mode::E, sum);
  r.extraction = true;
  for (int n = 1; n <= N; ++n)
    if (!(s.extracted_p[n] == qbinomial_power(a, n))) r.extraction = false;
  return r;
}

// ----------------------------------------------------------------------
// Tree inversions

// E_xp(t) = sum q^{binom(n,2)} t^n / n!.
Series<QScalar> q_exponential_deformation(int N);

// (1 - q)^{n-1} J_{n+1} / n!, the closed form of the extracted [p_n].
QScalar tree_power(int n, const OracleCache& cache = OracleCache{});

// The identity checks for trees on up to n_max + 1 vertices; n_max <= 7.
std::vector<CheckResult> tree_identities(int n_max, const OracleCache& cache = OracleCache{}, int q_order = 8);

// Both sides of the reciprocal identity for [n], with the printed sign
// (q - 1)^{k-1} when `printed` is set.
std::pair<QScalar, QScalar> reciprocal_qint_sides(int n, bool printed, const OracleCache& cache = OracleCache{});

}  // namespace qsym
