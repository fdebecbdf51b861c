#include "qsym/hermite.hpp"

#include <map>
#include <mutex>

#include "qsym/error.hpp"
#include "qsym/qcalculus.hpp"
#include "qsym/specializations.hpp"

namespace qsym {

namespace {

int binom2(int n) { return n * (n - 1) / 2; }
QScalar qp(int k) { return QScalar::q_power(k); }
QScalar one_minus_q() { return QScalar(1) - QScalar::q(); }
RealXPoly X() { return RealXPoly::x(); }

// x^{k-2}(x^2 - 1) for k >= 2, x for k = 1.
RealXPoly ph(int k) {
  if (k == 1) return X();
  return RealXPoly::monomial(QScalar(1), k - 2) * (RealXPoly::monomial(QScalar(1), 2) - RealXPoly(1));
}

// acc <- acc * (1 + c t^d), in place, descending so acc[n - d] is still old.
template <class P>
void mul_binomial(std::vector<P>& acc, const P& c, int d, int M) {
  for (int n = static_cast<int>(acc.size()) - 1; n >= d; --n) acc[n] = reduce_mod_q(acc[n] + c * acc[n - d], M);
}

// acc <- acc / (1 - c t^d), ascending so acc[n - d] is already new.
template <class P>
void div_binomial(std::vector<P>& acc, const P& c, int d, int M) {
  for (int n = d; n < static_cast<int>(acc.size()); ++n) acc[n] = reduce_mod_q(acc[n] + c * acc[n - d], M);
}

void check_degree(const RealXPoly& p, int bound, const char* what) {
  for (const auto& c : p.coeffs())
    if (!c.is_polynomial() || c.num().degree() > bound)
      throw std::logic_error(std::string(what) + ": q-degree exceeds the truncation bound");
}

}  // namespace

Matrix<RealXPoly> hermite_I_e_matrix(int n) {
  Matrix<RealXPoly> A(n, std::vector<RealXPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int k = i - j + 1;
      if (k >= 1) A[i - 1][j - 1] = k % 2 ? X() : RealXPoly(1);
      else if (k == 0) A[i - 1][j - 1] = RealXPoly(QScalar(1) - qp(i));
    }
  return A;
}

Matrix<RealXPoly> hermite_I_h_matrix(int n) {
  Matrix<RealXPoly> A(n, std::vector<RealXPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int k = i - j + 1;
      if (k >= 1) A[i - 1][j - 1] = ph(k) * qp(j - 1);
      else if (k == 0) A[i - 1][j - 1] = RealXPoly(qp(i) - QScalar(1));
    }
  return A;
}

RealXPoly hermite_I_e_det(int n) {
  if (n < 0) throw BadIndices("Hermite index must be nonnegative");
  return det_bareiss(hermite_I_e_matrix(n));
}

RealXPoly hermite_I_h_det(int n) {
  if (n < 0) throw BadIndices("Hermite index must be nonnegative");
  return det_bareiss(hermite_I_h_matrix(n));
}

std::vector<RealXPoly> hermite_I_series_route(int N) {
  if (N < 0) throw BadIndices("Hermite index must be nonnegative");
  const int M = N * (N + 1) / 2 + 1;
  std::vector<RealXPoly> acc(static_cast<std::size_t>(N) + 1);
  acc[0] = RealXPoly(1);
  for (int k = 0; k < M; ++k) {
    mul_binomial(acc, RealXPoly(-qp(2 * k)), 2, M);
    div_binomial(acc, X() * qp(k), 1, M);
  }
  std::vector<RealXPoly> H;
  for (int n = 0; n <= N; ++n) {
    RealXPoly h = reduce_mod_q(acc[n] * qpochhammer(QScalar::q(), n), M);
    check_degree(h, binom2(n), "hermite_I_series_route");
    H.push_back(std::move(h));
  }
  return H;
}

HermiteRoutes hermite_I_routes(int n) {
  return HermiteRoutes{hermite_I_e_det(n), hermite_I_h_det(n), hermite_I_series_route(n).back()};
}

RealXPoly hermite_I(int n) {
  static std::mutex mu;
  static std::map<int, RealXPoly> memo;
  {
    std::lock_guard<std::mutex> g(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  HermiteRoutes r = hermite_I_routes(n);
  if (!r.agree()) throw std::logic_error("hermite_I: the three routes disagree");
  std::lock_guard<std::mutex> g(mu);
  return memo.emplace(n, r.e_det).first->second;
}

Matrix<RealXPoly> hermite_H4_moment_matrix() {
  auto c = [](int k) { return RealXPoly(QScalar(1) - qp(k)); };
  RealXPoly o(1), z;
  return {
      {o, z, c(1), z, c(1) * c(3)},
      {z, o, z, c(3), z},
      {o, z, c(3), z, c(3) * c(5)},
      {z, o, z, c(5), z},
      {o, X(), X() * X(), X() * X() * X(), X() * X() * X() * X()},
  };
}

QScalar hermite_H4_moment_scale() { return qp(4) * (QScalar(1) - qp(2)).pow(2); }

Series<RealXPoly> hermite_I_generating(int N) {
  Series<RealXPoly> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, hermite_I(n) * qpochhammer(QScalar::q(), n).inverse());
  return s;
}

Series<RealXPoly> hermite_I_exp_argument(int N) {
  Series<RealXPoly> s(N);
  for (int n = 1; n <= N; ++n) {
    RealXPoly c = n % 2 ? X() : RealXPoly(1);
    QScalar w = (one_minus_q() * qint(n)).inverse();
    if (n % 2 == 0) w = -w;
    s.set(n, c * w);
  }
  return s;
}

RealXPoly hermite_power(int n) {
  RealXPoly c = n % 2 ? X() : RealXPoly(1);
  return c * one_minus_q().inverse();
}

RealXPoly hermite_power_h(int n) { return ph(n) * one_minus_q().inverse(); }

Series<RealXPoly> hermite_p_series(int N) {
  Series<RealXPoly> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, hermite_power(n + 1));
  return s;
}

Series<RealXPoly> hermite_p_h_series(int N) {
  Series<RealXPoly> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, hermite_power_h(n + 1));
  return s;
}

Matrix<GaussXPoly> hermite_II_matrix(int n) {
  GaussQ w = GaussQ(one_minus_q().inverse());
  GaussXPoly odd = GaussXPoly::monomial(GaussQ::i() * w, 1);
  GaussXPoly even(w);
  Matrix<GaussXPoly> A(n, std::vector<GaussXPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int k = i - j + 1;
      if (k >= 1) A[i - 1][j - 1] = (k % 2 ? odd : even) * GaussQ(qp(j - 1));
      else if (k == 0) A[i - 1][j - 1] = GaussXPoly(GaussQ(-qint(i)));
    }
  return A;
}

RealXPoly hermite_II(int n) {
  if (n < 0) throw BadIndices("Hermite index must be nonnegative");
  GaussXPoly d = det_bareiss(hermite_II_matrix(n));
  GaussQ pre = (GaussQ::i() * GaussQ(QScalar::q() - QScalar(1))).pow(n) * GaussQ(qp(-binom2(n)));
  return real_part_checked(d * pre);
}

std::vector<RealXPoly> hermite_II_series_route(int N) {
  if (N < 0) throw BadIndices("Hermite index must be nonnegative");
  const int M = N * (N + 1) / 2 + 1;
  std::vector<RealXPoly> acc(static_cast<std::size_t>(N) + 1);
  acc[0] = RealXPoly(1);
  for (int k = 0; k < M; ++k) {
    mul_binomial(acc, X() * qp(k), 1, M);
    div_binomial(acc, RealXPoly(-qp(2 * k)), 2, M);
  }
  std::vector<RealXPoly> K;
  for (int n = 0; n <= N; ++n) {
    RealXPoly h = reduce_mod_q(acc[n] * qpochhammer(QScalar::q(), n), M);
    check_degree(h, binom2(n), "hermite_II_series_route");
    K.push_back(std::move(h));
  }
  return K;
}

Series<RealXPoly> hermite_II_generating(int N) {
  Series<RealXPoly> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, hermite_II(n) * (qp(binom2(n)) / qpochhammer(QScalar::q(), n)));
  return s;
}

Series<RealXPoly> hermite_II_star_argument(int N) {
  Series<RealXPoly> s(N);
  for (int n = 1; n <= N; ++n) {
    RealXPoly c = n % 2 ? X() : RealXPoly(1);
    QScalar w = (one_minus_q() * qint(n)).inverse();
    if ((n / 2) % 2 == 1) w = -w;
    s.set(n, c * w);
  }
  return s;
}

std::vector<Rational> classical_hermite_scaled(int n) {
  // K_{n+1} = x K_n - (n/2) K_{n-1}, K_n = H_n(x)/2^n
  std::vector<Rational> prev, cur = {Rational(1)};
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> next(cur.size() + 1, Rational(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= Rational(k, 2) * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rational> hermite_I_q_to_1(int n) {
  RealXPoly h = hermite_I(n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  QScalar s = QScalar(1) - qp(2);
  for (int j = 0; j <= n; ++j) {
    QScalar c = h.coeff(j);
    if ((n - j) % 2) {
      if (!c.is_zero()) throw std::logic_error("hermite_I_q_to_1: odd-gap coefficient would need a square root");
      continue;
    }
    out[j] = eval_at(c / s.pow((n - j) / 2), Rational(1));
  }
  return out;
}

std::vector<CheckResult> hermite_checks(int n_max, int n_max_ii, int exp_order, int star_order) {
  std::vector<CheckResult> out;
  auto np = [](int n) { return "n=" + std::to_string(n); };

  std::vector<RealXPoly> series = hermite_I_series_route(n_max);
  for (int n = 0; n <= n_max; ++n) {
    RealXPoly e = hermite_I_e_det(n), h = hermite_I_h_det(n);
    out.push_back(check_equal("hermite-I-e-vs-h-determinant", np(n), e, h));
    out.push_back(check_equal("hermite-I-e-determinant-vs-series", np(n), e, series[n]));
  }

  out.push_back(guarded("hermite-I-moment-determinant", "n=4", [] {
    RealXPoly d = det_bareiss(hermite_H4_moment_matrix()) * hermite_H4_moment_scale().inverse();
    return check_equal("hermite-I-moment-determinant", "n=4", d, hermite_I_e_det(4));
  }));

  const std::string pN = "N=" + std::to_string(exp_order);
  Series<RealXPoly> G = hermite_I_generating(exp_order);
  Series<RealXPoly> F = hermite_I_exp_argument(exp_order);
  out.push_back(check_equal("hermite-I-exponential-form", pN, gessel_exp(F), G));
  out.push_back(check_equal("hermite-I-exponential-inverse", pN, invert_gessel_exp(G), F));

  auto sE = specialize(Mode::E, G);
  out.push_back(check_equal("hermite-I-extracted-p-series", pN, extracted_p_series(sE), hermite_p_series(exp_order - 1)));
  auto sH = specialize(Mode::H, G);
  out.push_back(
      check_equal("hermite-I-extracted-p-h-series", pN, extracted_p_series(sH), hermite_p_h_series(exp_order - 1)));
  auto sDual = specialize(Mode::H, invert(negate_arg(G)));
  out.push_back(check_equal("hermite-I-mode-duality", pN, extracted_p_series(sDual), extracted_p_series(sE)));

  for (int n = 0; n <= std::min(4, n_max); ++n) {
    out.push_back(guarded("hermite-I-q-to-1-limit", np(n), [&] {
      auto a = hermite_I_q_to_1(n), b = classical_hermite_scaled(n);
      return check_equal("hermite-I-q-to-1-limit", np(n), RealXPoly(std::vector<QScalar>(a.begin(), a.end())),
                         RealXPoly(std::vector<QScalar>(b.begin(), b.end())));
    }));
  }

  std::vector<RealXPoly> series_ii = hermite_II_series_route(n_max_ii);
  for (int n = 0; n <= n_max_ii; ++n) {
    out.push_back(guarded("hermite-II-determinant-vs-series", np(n), [&] {
      RealXPoly k = hermite_II(n) * qp(binom2(n));
      return check_equal("hermite-II-determinant-vs-series", np(n), k, series_ii[n]);
    }));
  }

  out.push_back(guarded("hermite-II-star-form", "N=" + std::to_string(star_order), [&] {
    return check_equal("hermite-II-star-form", "N=" + std::to_string(star_order),
                       star_exp(hermite_II_star_argument(star_order)), hermite_II_generating(star_order));
  }));
  return out;
}

}  // namespace qsym
