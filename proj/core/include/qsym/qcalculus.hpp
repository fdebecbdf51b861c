#pragma once

#include <vector>

#include "qsym/error.hpp"
#include "qsym/qnumbers.hpp"
#include "qsym/series.hpp"

namespace qsym {

namespace detail {

template <CoefficientRing C>
C zero() {
  return C(QScalar());
}

template <CoefficientRing C>
void require_no_constant(const Series<C>& F) {
  if (!F[0].is_zero()) throw NonzeroConstantTerm("series must vanish at t = 0");
}

// Coefficients in divided normalization: f_n = a_n [n]_psi!.
template <CoefficientRing C>
std::vector<C> divided(const Series<C>& F, BaseExponent m) {
  std::vector<C> f;
  for (int n = 0; n <= F.t_order(); ++n) f.push_back(F[n] * C(qfact(n, m)));
  return f;
}

template <CoefficientRing C>
Series<C> undivided(std::vector<C> f, int N, BaseExponent m, std::optional<int> M) {
  for (int n = 0; n <= N; ++n) f[n] = f[n] * C(qfact(n, m).inverse());
  return Series<C>(std::move(f), N, M);
}

// f_{n,k} for k = 0..K, n = 0..N, by the power recurrence.  With `star`
// each step carries psi^{-(k-1)} and psi^j inside the sum.
template <CoefficientRing C>
std::vector<std::vector<C>> power_table(const Series<C>& F, int K, BaseExponent m, bool star) {
  require_no_constant(F);
  const int N = F.t_order();
  std::vector<C> f1 = divided(F, m);
  std::vector<std::vector<C>> t(static_cast<std::size_t>(K) + 1,
                                std::vector<C>(static_cast<std::size_t>(N) + 1, zero<C>()));
  t[0][0] = C(QScalar(1));
  for (int k = 1; k <= K; ++k) {
    QScalar pre = qint(k, m);
    if (star) pre *= psi_power(m, -(k - 1));
    for (int n = 0; n + 1 <= N; ++n) {
      C s = zero<C>();
      for (int j = k - 1; j <= n; ++j) {
        if (t[k - 1][j].is_zero() || f1[n - j + 1].is_zero()) continue;
        QScalar w = qbinom(n, j, m);
        if (star) w *= psi_power(m, j);
        s = s + f1[n - j + 1] * t[k - 1][j] * C(w);
      }
      t[k][n + 1] = s * C(pre);
    }
  }
  return t;
}

}  // namespace detail

// F^{[k]} (Gessel divided power) in base q^m.
template <CoefficientRing C>
Series<C> q_bracket_power(const Series<C>& F, int k, BaseExponent m = BaseExponent{}) {
  if (k < 0) throw BadIndices("power index must be nonnegative");
  auto t = detail::power_table(F, k, m, false);
  return detail::undivided(std::move(t[k]), F.t_order(), m, F.q_order());
}

// F^{[k]*} in base q^m.
template <CoefficientRing C>
Series<C> q_star_power(const Series<C>& F, int k, BaseExponent m = BaseExponent{}) {
  if (k < 0) throw BadIndices("power index must be nonnegative");
  auto t = detail::power_table(F, k, m, true);
  return detail::undivided(std::move(t[k]), F.t_order(), m, F.q_order());
}

namespace detail {

template <CoefficientRing C>
Series<C> compose(const Series<C>& G, const Series<C>& F, BaseExponent m, bool star) {
  int N = std::min(G.t_order(), F.t_order());
  Series<C> Ft = F.truncated(N);
  auto t = power_table(Ft, N, m, star);
  Series<C> r(N, F.q_order());
  for (int k = 0; k <= N; ++k) {
    if (G[k].is_zero()) continue;
    Series<C> pk = undivided(t[k], N, m, F.q_order());
    r += pk * G[k];
  }
  return r;
}

}  // namespace detail

// G[F] = sum_k b_k F^{[k]} with b_k the ordinary coefficients of G.
template <CoefficientRing C>
Series<C> q_compose(const Series<C>& G, const Series<C>& F, BaseExponent m = BaseExponent{}) {
  return detail::compose(G, F, m, false);
}

template <CoefficientRing C>
Series<C> q_star_compose(const Series<C>& G, const Series<C>& F, BaseExponent m = BaseExponent{}) {
  return detail::compose(G, F, m, true);
}

// e_psi(t) = sum t^n/[n]!.
template <CoefficientRing C = QScalar>
Series<C> e_q_series(int N, BaseExponent m = BaseExponent{}) {
  Series<C> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, C(qfact(n, m).inverse()));
  return s;
}

// E_psi(t) = sum psi^{binom(n,2)} t^n/[n]!.
template <CoefficientRing C = QScalar>
Series<C> E_q_series(int N, BaseExponent m = BaseExponent{}) {
  Series<C> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, C(psi_power(m, n * (n - 1) / 2) * qfact(n, m).inverse()));
  return s;
}

namespace detail {

template <CoefficientRing C>
Series<C> exp_recurrence(const Series<C>& F, BaseExponent m, bool star) {
  require_no_constant(F);
  const int N = F.t_order();
  std::vector<C> f = divided(F, m);
  std::vector<C> g(static_cast<std::size_t>(N) + 1, zero<C>());
  g[0] = C(QScalar(1));
  for (int n = 0; n + 1 <= N; ++n) {
    C s = zero<C>();
    for (int k = 0; k <= n; ++k) {
      if (f[k + 1].is_zero() || g[n - k].is_zero()) continue;
      QScalar w = qbinom(n, k, m);
      if (star) w *= psi_power(m, n - k);
      s = s + g[n - k] * f[k + 1] * C(w);
    }
    g[n + 1] = s;
  }
  return undivided(std::move(g), N, m, F.q_order());
}

template <CoefficientRing C>
Series<C> exp_inverse(const Series<C>& G, BaseExponent m, bool star) {
  if (!(G[0] == C(QScalar(1)))) throw BadConstantTerm("series must start with 1");
  const int N = G.t_order();
  std::vector<C> g = divided(G, m);
  std::vector<C> f(static_cast<std::size_t>(N) + 1, zero<C>());
  for (int n = 0; n + 1 <= N; ++n) {
    C s = g[n + 1];
    for (int k = 0; k < n; ++k) {
      if (f[k + 1].is_zero() || g[n - k].is_zero()) continue;
      QScalar w = qbinom(n, k, m);
      if (star) w *= psi_power(m, n - k);
      s = s - g[n - k] * f[k + 1] * C(w);
    }
    f[n + 1] = s;
  }
  return undivided(std::move(f), N, m, G.q_order());
}

}  // namespace detail

// e_psi[F]_psi by the gamma recurrence.
template <CoefficientRing C>
Series<C> gessel_exp(const Series<C>& F, BaseExponent m = BaseExponent{}) {
  return detail::exp_recurrence(F, m, false);
}

// E_psi[F]*_psi by the starred gamma recurrence.
template <CoefficientRing C>
Series<C> star_exp(const Series<C>& F, BaseExponent m = BaseExponent{}) {
  return detail::exp_recurrence(F, m, true);
}

// The F with F(0) = 0 and gessel_exp(F) = G.
template <CoefficientRing C>
Series<C> invert_gessel_exp(const Series<C>& G, BaseExponent m = BaseExponent{}) {
  return detail::exp_inverse(G, m, false);
}

template <CoefficientRing C>
Series<C> invert_star_exp(const Series<C>& G, BaseExponent m = BaseExponent{}) {
  return detail::exp_inverse(G, m, true);
}

namespace detail {

// (1 - psi) t (D_psi F)(t), the common piece of the product factors.
template <CoefficientRing C>
Series<C> product_kernel(const Series<C>& F, BaseExponent m) {
  require_no_constant(F);
  Series<C> d = shift_t(q_derive(F, m), 1);
  return d * C(QScalar(1) - psi_power(m, 1));
}

template <CoefficientRing C>
Series<C> product(const Series<C>& F, BaseExponent m, int N, int M, bool upper) {
  if (m.value() <= 0) throw BadBase("infinite products need a base q^m with m >= 1");
  if (N < 1 || M < 1) throw BadIndices("product truncation orders must be positive");
  Series<C> ker = reduce_mod_q(product_kernel(F.truncated(N), m), M);
  Series<C> one = Series<C>::constant(C(QScalar(1)), ker.t_order());
  one.set_q_order(M);
  Series<C> acc = one;
  for (int k = 0; k < M; ++k) {
    Series<C> fk = scale_arg(ker, psi_power(m, k));
    if (upper) acc = acc * (one + fk);
    else acc = acc * invert(one - fk);
  }
  return acc;
}

}  // namespace detail

// prod_{k<M} (1 - (1-psi) psi^k t (D_psi F)(psi^k t))^{-1} mod (q^M, t^{N+1}).
template <CoefficientRing C>
Series<C> qproduct_e(const Series<C>& F, BaseExponent m, int N, int M) {
  return detail::product(F, m, N, M, false);
}

// prod_{k<M} (1 + (1-psi) psi^k t (D_psi F)(psi^k t)) mod (q^M, t^{N+1}).
template <CoefficientRing C>
Series<C> qproduct_E(const Series<C>& F, BaseExponent m, int N, int M) {
  return detail::product(F, m, N, M, true);
}

// G (1 - (1-psi) t D_psi F) = G(psi t) with G = e_psi[F], exactly.
template <CoefficientRing C>
bool verify_one_step_e(const Series<C>& F, BaseExponent m = BaseExponent{}) {
  Series<C> G = gessel_exp(F, m);
  Series<C> ker = detail::product_kernel(F, m);
  Series<C> one = Series<C>::constant(C(QScalar(1)), ker.t_order());
  return G * (one - ker) == scale_arg(G, psi_power(m, 1));
}

// G* = (1 + (1-psi) t D_psi F) G*(psi t) with G* = E_psi[F]*, exactly.
template <CoefficientRing C>
bool verify_one_step_E(const Series<C>& F, BaseExponent m = BaseExponent{}) {
  Series<C> G = star_exp(F, m);
  Series<C> ker = detail::product_kernel(F, m);
  Series<C> one = Series<C>::constant(C(QScalar(1)), ker.t_order());
  return G == (one + ker) * scale_arg(G, psi_power(m, 1));
}

// e[-F] E[F]* = 1 and E[-F]* e[F] = 1.
template <CoefficientRing C>
bool verify_reciprocal(const Series<C>& F, BaseExponent m = BaseExponent{}) {
  Series<C> one = Series<C>::constant(C(QScalar(1)), F.t_order());
  return gessel_exp(-F, m) * star_exp(F, m) == one && star_exp(-F, m) * gessel_exp(F, m) == one;
}

}  // namespace qsym
