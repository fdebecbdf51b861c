#include "qsym/symfun.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/render.hpp"

namespace qsym {

namespace {

// Shared memo tables.  Values are computed outside the lock, so recursive
// lookups never deadlock; a racing duplicate insert stores the same value.
template <class Key>
class Memo {
 public:
  template <class F>
  SymPoly get(const Key& k, F&& compute) {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = table_.find(k);
      if (it != table_.end()) return it->second;
    }
    SymPoly v = compute();
    std::lock_guard<std::mutex> g(mu_);
    return table_.emplace(k, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, SymPoly> table_;
};

Memo<int>& h_memo() {
  static Memo<int> m;
  return m;
}
Memo<std::tuple<int, int, int>>& pr_memo() {
  static Memo<std::tuple<int, int, int>> m;
  return m;
}
Memo<std::pair<int, int>>& p_memo() {
  static Memo<std::pair<int, int>> m;
  return m;
}

SymPoly e(int k) { return SymPoly::e(k); }

}  // namespace

Series<SymPoly> e_series(int N) {
  Series<SymPoly> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, e(n));
  return s;
}

Series<SymPoly> h_from_e(int N) { return invert(scale_arg(e_series(N), QScalar(-1))); }

SymPoly h_poly(int n) {
  if (n < 0) return SymPoly();
  if (n == 0) return SymPoly(1);
  return h_memo().get(n, [n] {
    // h_n = sum_{k=1}^n (-1)^{k-1} e_k h_{n-k}
    SymPoly s;
    for (int k = 1; k <= n; ++k) {
      SymPoly t = e(k) * h_poly(n - k);
      if (k % 2 == 1) s += t;
      else s -= t;
    }
    return s;
  });
}

Matrix<SymPoly> det_matrix(DetForm form, int n, BaseExponent m, int r) {
  if (n < 1) throw BadIndices("determinant size must be positive");
  Matrix<SymPoly> A;
  switch (form) {
    case DetForm::PrFromE: {
      if (r < 0 || n < r) throw BadIndices("need n >= r >= 0");
      int sz = n - r + 1;
      A.assign(sz, std::vector<SymPoly>(sz));
      for (int i = 0; i < sz; ++i) {
        A[i][0] = e(r + i) * qbinom(r + i, r, m);
        for (int j = 1; j < sz; ++j) A[i][j] = e(i - j + 1);
      }
      return A;
    }
    case DetForm::PFromE:
      A.assign(n, std::vector<SymPoly>(n));
      for (int i = 1; i <= n; ++i) {
        A[i - 1][0] = e(i) * qint(i, m);
        for (int j = 2; j <= n; ++j) A[i - 1][j - 1] = e(i - j + 1);
      }
      return A;
    case DetForm::EFromP:
      A.assign(n, std::vector<SymPoly>(n));
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) A[i - 1][j - 1] = q_power(i - j + 1, m);
        if (i < n) A[i - 1][i] = SymPoly(qint(i, m));
      }
      return A;
    case DetForm::PFromH:
      A.assign(n, std::vector<SymPoly>(n));
      for (int i = 1; i <= n; ++i) {
        A[i - 1][0] = h_poly(i) * qint(i, m);
        for (int j = 2; j <= i + 1 && j <= n; ++j)
          A[i - 1][j - 1] = h_poly(i - j + 1) * psi_power(m, i - j + 1);
      }
      return A;
    case DetForm::HFromP:
      A.assign(n, std::vector<SymPoly>(n));
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) A[i - 1][j - 1] = q_power(i - j + 1, m) * psi_power(m, j - 1);
        if (i < n) A[i - 1][i] = SymPoly(-qint(i, m));
      }
      return A;
  }
  throw BadIndices("unknown determinant form");
}

std::string det_form_name(DetForm form) {
  switch (form) {
    case DetForm::PFromE: return "p-from-e";
    case DetForm::PrFromE: return "pr-from-e";
    case DetForm::EFromP: return "e-from-p";
    case DetForm::PFromH: return "p-from-h";
    case DetForm::HFromP: return "h-from-p";
  }
  return "?";
}

SymPoly q_power_r(int n, int r, BaseExponent m) {
  if (r < 0 || n < r) throw BadIndices("q_power_r needs n >= r >= 0");
  return pr_memo().get({n, r, m.value()},
                       [&] { return det_berkowitz(det_matrix(DetForm::PrFromE, n, m, r)); });
}

SymPoly q_power(int n, BaseExponent m) {
  if (n < 1) throw BadIndices("q_power needs n >= 1");
  return p_memo().get({n, m.value()}, [&] {
    SymPoly s = e(n) * qint(n, m);
    for (int k = 1; k < n; ++k) {
      SymPoly t = e(n - k) * q_power(k, m);
      if (k % 2 == 1) s -= t;
      else s += t;
    }
    return n % 2 == 1 ? s : -s;
  });
}

SymPoly q_power_det(int n, BaseExponent m) {
  if (n < 1) throw BadIndices("q_power needs n >= 1");
  return det_berkowitz(det_matrix(DetForm::PFromE, n, m));
}

SymPoly q_power_from_h(int n, BaseExponent m) {
  if (n < 1) throw BadIndices("q_power needs n >= 1");
  std::vector<SymPoly> p(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    SymPoly s = h_poly(j) * qint(j, m);
    for (int k = 1; k < j; ++k) s -= h_poly(k) * p[j - k] * psi_power(m, k);
    p[j] = std::move(s);
  }
  return p[n];
}

SymPoly q_power_r_solve(int n, int r, BaseExponent m) {
  if (r < 0 || n < r) throw BadIndices("q_power_r needs n >= r >= 0");
  std::vector<SymPoly> p(static_cast<std::size_t>(n) + 1);
  for (int j = r; j <= n; ++j) {
    SymPoly s = e(j) * qbinom(j, r, m);
    for (int k = r; k < j; ++k) {
      SymPoly t = e(j - k) * p[k];
      if ((k - r) % 2 == 0) s -= t;
      else s += t;
    }
    p[j] = (j - r) % 2 == 0 ? s : -s;
  }
  return p[n];
}

SymPoly q_power_partition(const Partition& lambda, BaseExponent m) {
  SymPoly s(1);
  for (int part : lambda.parts()) s *= q_power(part, m);
  return s;
}

PowerSource default_powers(BaseExponent m) {
  return [m](int k) { return q_power(k, m); };
}

PowerSource perturbed_powers(PowerSource base, int k) {
  return [base = std::move(base), k](int j) {
    SymPoly p = base(j);
    if (j != k) return p;
    if (p.is_zero()) return SymPoly(1);
    return p + SymPoly::monomial(p.terms().begin()->first, QScalar(1));
  };
}

SymPoly girard_e_residual(int n, BaseExponent m, const PowerSource& p) {
  SymPoly s = -(e(n) * qint(n, m));
  for (int k = 1; k <= n; ++k) {
    SymPoly t = e(n - k) * p(k);
    if (k % 2 == 1) s += t;
    else s -= t;
  }
  return s;
}

SymPoly girard_h_residual(int n, BaseExponent m, const PowerSource& p, bool swap_weight) {
  SymPoly s = -(h_poly(n) * qint(n, m));
  for (int k = 1; k <= n; ++k) s += h_poly(n - k) * p(k) * psi_power(m, swap_weight ? k : n - k);
  return s;
}

bool verify_girard_e(int n, BaseExponent m, int perturb_p) {
  PowerSource p = default_powers(m);
  if (perturb_p > 0) p = perturbed_powers(p, perturb_p);
  return girard_e_residual(n, m, p).is_zero();
}

bool verify_girard_h(int n, BaseExponent m, int perturb_p, bool swap_weight) {
  PowerSource p = default_powers(m);
  if (perturb_p > 0) p = perturbed_powers(p, perturb_p);
  return girard_h_residual(n, m, p, swap_weight).is_zero();
}

SymPoly e_det_from_p(int n, BaseExponent m) {
  return det_berkowitz(det_matrix(DetForm::EFromP, n, m)) * qfact(n, m).inverse();
}

SymPoly h_det_from_p(int n, BaseExponent m) {
  return det_berkowitz(det_matrix(DetForm::HFromP, n, m)) * qfact(n, m).inverse();
}

SymPoly p_det_from_h(int n, BaseExponent m) {
  SymPoly d = det_berkowitz(det_matrix(DetForm::PFromH, n, m));
  return n % 2 == 1 ? d : -d;
}

SymPoly e_expansion(int n, BaseExponent m) {
  SymPoly s;
  for (const auto& lam : partitions_of(n))
    s += q_power_partition(lam, m) * (q_z(lam, m).inverse() * QScalar(static_cast<long>(epsilon(lam))));
  return s;
}

SymPoly h_expansion(int n, BaseExponent m) {
  SymPoly s;
  for (const auto& lam : partitions_of(n)) s += q_power_partition(lam, m) * q_z_h(lam, m).inverse();
  return s;
}

namespace {

// Visits chains n-1 >= k_1 > ... > k_{r-1} >= 1, k_r = 0 as the list of
// nonzero k's in decreasing order.
template <class F>
void for_each_chain(int n, F&& f) {
  int top = n - 1;
  for (unsigned mask = 0; mask < (1u << top); ++mask) {
    std::vector<int> ks;
    for (int v = top; v >= 1; --v)
      if (mask & (1u << (v - 1))) ks.push_back(v);
    f(ks);
  }
}

SymPoly lemma_sum(int n, BaseExponent m, bool h_side) {
  if (n < 1) throw BadIndices("lemma sums need n >= 1");
  SymPoly s;
  QScalar top = qfact(n - 1, m);
  for_each_chain(n, [&](const std::vector<int>& ks) {
    int r = static_cast<int>(ks.size()) + 1;
    QScalar c = top;
    int prev = n, ksum = 0;
    SymPoly prod(1);
    for (int k : ks) {
      c *= qint(k, m).inverse();
      prod *= q_power(prev - k, m);
      prev = k;
      ksum += k;
    }
    prod *= q_power(prev, m);  // last step down to k_r = 0
    if (h_side) c *= psi_power(m, ksum);
    else if ((n - r) % 2 != 0) c = -c;
    s += prod * c;
  });
  return s;
}

}  // namespace

SymPoly lemma_sum_e(int n, BaseExponent m) { return lemma_sum(n, m, false); }
SymPoly lemma_sum_h(int n, BaseExponent m) { return lemma_sum(n, m, true); }

Series<SymPoly> P_series(int N, BaseExponent m) {
  Series<SymPoly> s(N);
  for (int n = 1; n <= N; ++n) s.set(n, q_power(n, m) * qint(n, m).inverse());
  return s;
}

Series<SymPoly> p_small_series(int N, BaseExponent m) {
  Series<SymPoly> s(N);
  for (int n = 0; n <= N; ++n) s.set(n, q_power(n + 1, m));
  return s;
}

std::string latex_matrix(const Matrix<SymPoly>& M) {
  std::ostringstream os;
  os << "\\begin{vmatrix}\n";
  for (const auto& row : M) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << " & ";
      os << to_latex(row[j]);
    }
    os << " \\\\\n";
  }
  os << "\\end{vmatrix}";
  return os.str();
}

}  // namespace qsym
