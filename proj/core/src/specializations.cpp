#include "qsym/specializations.hpp"

#include "qsym/linalg.hpp"

namespace qsym {

namespace {

QScalar qs(const Rational& r) { return QScalar(r); }
QScalar one_minus_q() { return QScalar(1) - QScalar::q(); }
int binom2(int n) { return n * (n - 1) / 2; }

std::string n_param(int n) { return "n=" + std::to_string(n); }

}  // namespace

Series<QScalar> q_exponential_deformation(int N) {
  Series<QScalar> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, QScalar::q_power(binom2(n)) / qs(factorial(n)));
  return s;
}

QScalar tree_power(int n, const OracleCache& cache) {
  return one_minus_q().pow(n - 1) * J_poly(n + 1, cache) / qs(factorial(n));
}

std::pair<QScalar, QScalar> reciprocal_qint_sides(int n, bool printed, const OracleCache& cache) {
  QScalar rhs;
  QScalar sign_base = printed ? QScalar::q() - QScalar(1) : one_minus_q();
  for (int k = 1; k <= n; ++k)
    rhs += qs(binomial(n, k)) * QScalar::q_power((k + 1) * (n - k)) * sign_base.pow(k - 1) *
           J_reciprocal(k + 1, cache);
  return {qint(n), rhs};
}

std::vector<CheckResult> tree_identities(int n_max, const OracleCache& cache, int q_order) {
  if (n_max > 7) throw TooLarge("tree identities need J_{n+1} with n <= 7");
  if (n_max < 1) throw BadIndices("n_max must be positive");
  std::vector<CheckResult> out;
  std::vector<QScalar> Js(n_max + 2), Jbars(n_max + 2);
  for (int n = 1; n <= n_max + 1; ++n) {
    Js[n] = J_poly(n, cache);
    Jbars[n] = tree_reciprocal(Js[n], n);
  }
  auto J = [&](int n) { return Js.at(n); };

  for (int n = 1; n <= n_max + 1; ++n) {
    QScalar j = J(n);
    QScalar at1(eval_at(j, 1));
    out.push_back(check_equal("tree-count", n_param(n), at1, QScalar(static_cast<long>(tree_count(n)))));
  }

  Series<QScalar> Exp = q_exponential_deformation(n_max);
  auto spec = specialize(Mode::E, Exp);
  for (int n = 1; n <= n_max; ++n)
    out.push_back(check_equal("tree-power-closed-form", n_param(n), spec.extracted_p[n], tree_power(n, cache)));

  // [n] q^{binom(n,2)} = sum_k binom(n,k) q^{binom(n-k,2)} (q-1)^{k-1} J_{k+1}
  for (int n = 1; n <= n_max; ++n) {
    QScalar rhs;
    for (int k = 1; k <= n; ++k)
      rhs += qs(binomial(n, k)) * QScalar::q_power(binom2(n - k)) * (QScalar::q() - QScalar(1)).pow(k - 1) *
             J(k + 1);
    out.push_back(check_equal("tree-qint-sum", n_param(n), qint(n) * QScalar::q_power(binom2(n)), rhs));
  }

  // (1-q)^{n-1} J_{n+1} = n! det, the power determinant at e_k = q^{binom(k,2)}/k!
  for (int n = 1; n <= n_max; ++n) {
    Matrix<QScalar> A(n, std::vector<QScalar>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int k = i - j + 1;
        if (j == 1) A[i - 1][0] = qint(i) * QScalar::q_power(binom2(i)) / qs(factorial(i));
        else if (k >= 1) A[i - 1][j - 1] = QScalar::q_power(binom2(k)) / qs(factorial(k));
        else if (k == 0) A[i - 1][j - 1] = QScalar(1);
      }
    out.push_back(check_equal("tree-power-determinant", n_param(n), one_minus_q().pow(n - 1) * J(n + 1),
                              qs(factorial(n)) * det_field(A)));
  }

  // [n]! q^{binom(n,2)}/n! = det with entries (1-q)^{k-1} J_{k+1}/k! and superdiagonal [i]
  for (int n = 1; n <= n_max; ++n) {
    Matrix<QScalar> A(n, std::vector<QScalar>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int k = i - j + 1;
        if (k >= 1) A[i - 1][j - 1] = one_minus_q().pow(k - 1) * J(k + 1) / qs(factorial(k));
        else if (k == 0) A[i - 1][j - 1] = qint(i);
      }
    out.push_back(check_equal("tree-exponential-determinant", n_param(n),
                              qfact(n) * QScalar::q_power(binom2(n)) / qs(factorial(n)), det_field(A)));
  }

  // E_xp = e_q[sum (q-1)^{n-1} J_{n+1}/([n] n!) t^n]
  {
    Series<QScalar> F(n_max);
    for (int n = 1; n <= n_max; ++n)
      F.set(n, (QScalar::q() - QScalar(1)).pow(n - 1) * J(n + 1) / (qint(n) * qs(factorial(n))));
    out.push_back(check_equal("tree-composition", "N=" + std::to_string(n_max), gessel_exp(F), Exp));
  }

  // E_xp = prod_k (1 + sum_n (1-q)^n/n! (-q^k t)^n J_{n+1})^{-1}
  {
    const int N = n_max - 1, M = q_order;
    if (N >= 1) {
      Series<QScalar> acc = Series<QScalar>::constant(QScalar(1), N);
      acc.set_q_order(M);
      for (int k = 0; k < M; ++k) {
        Series<QScalar> f = Series<QScalar>::constant(QScalar(1), N);
        f.set_q_order(M);
        for (int n = 1; n <= N; ++n)
          f.set(n, one_minus_q().pow(n) / qs(factorial(n)) * QScalar::q_power(k * n) * QScalar(n % 2 ? -1 : 1) *
                       J(n + 1));
        acc = acc * invert(f);
      }
      out.push_back(check_equal("tree-product", "N=" + std::to_string(N) + " M=" + std::to_string(M), acc,
                                reduce_mod_q(Exp.truncated(N), M)));
    }
  }

  // Reciprocal forms with Jbar_n = q^{binom(n-1,2)} J_n(1/q)
  for (int n = 1; n <= n_max; ++n) {
    QScalar rhs;
    for (int k = 1; k <= n; ++k)
      rhs += qs(binomial(n, k)) * QScalar::q_power((k + 1) * (n - k)) * one_minus_q().pow(k - 1) * Jbars[k + 1];
    out.push_back(check_equal("tree-reciprocal-qint", n_param(n), qint(n), rhs));
  }
  for (int n = 0; n <= n_max; ++n) {
    QScalar rhs;
    for (int k = 0; k <= n; ++k)
      rhs += qs(binomial(n, k)) * QScalar::q_power((k + 1) * (n - k)) * one_minus_q().pow(k) * Jbars[k + 1];
    out.push_back(check_equal("tree-reciprocal-unit", n_param(n), QScalar(1), rhs));
  }
  return out;
}

}  // namespace qsym
