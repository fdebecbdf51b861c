#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/qnumbers.hpp"
#include "qsym/qscalar.hpp"
#include "qsym/ring.hpp"

namespace qsym {

// Truncated power series c_0 + c_1 t + ... + c_N t^N.  Terms beyond N are
// unknown.  With q_order M set, coefficients are kept reduced mod q^M.
template <CoefficientRing C>
class Series {
 public:
  Series() : c_(1), n_(0) {}
  explicit Series(int t_order, std::optional<int> q_order = std::nullopt)
      : c_(static_cast<std::size_t>(check_order(t_order)) + 1), n_(t_order), m_(q_order) {}
  Series(std::vector<C> coeffs, int t_order, std::optional<int> q_order = std::nullopt)
      : c_(std::move(coeffs)), n_(check_order(t_order)), m_(q_order) {
    c_.resize(static_cast<std::size_t>(n_) + 1);
    if (m_) reduce();
  }

  static Series constant(const C& c, int t_order) {
    Series s(t_order);
    s.c_[0] = c;
    return s;
  }
  static Series monomial(const C& c, int k, int t_order) {
    Series s(t_order);
    if (k >= 0 && k <= t_order) s.c_[k] = c;
    return s;
  }
  static Series t(int t_order) { return monomial(C(QScalar(1)), 1, t_order); }

  int t_order() const { return n_; }
  std::optional<int> q_order() const { return m_; }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  C coeff(int n) const { return (n >= 0 && n <= n_) ? c_[n] : C(QScalar()); }
  void set(int n, C v) {
    c_.at(static_cast<std::size_t>(n)) = std::move(v);
    if (m_) c_[n] = reduce_mod_q(c_[n], *m_);
  }

  Series truncated(int t_order) const {
    Series s = *this;
    s.n_ = std::min(n_, check_order(t_order));
    s.c_.resize(static_cast<std::size_t>(s.n_) + 1);
    return s;
  }

  template <class F>
  Series map_coeffs(F&& f) const {
    Series s = *this;
    for (auto& c : s.c_) c = f(c);
    if (s.m_) s.reduce();
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
  }
  Series& operator+=(const Series& o) { return *this = combine(*this, o, true); }
  Series& operator-=(const Series& o) { return *this = combine(*this, o, false); }
  friend Series operator+(const Series& a, const Series& b) { return combine(a, b, true); }
  friend Series operator-(const Series& a, const Series& b) { return combine(a, b, false); }

  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.n_, b.n_), min_q(a.m_, b.m_));
    for (int i = 0; i <= r.n_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= r.n_; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    if (r.m_) r.reduce();
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  friend Series operator*(const Series& a, const C& s) {
    Series r = a;
    for (auto& c : r.c_) c = c * s;
    if (r.m_) r.reduce();
    return r;
  }
  friend Series operator*(const C& s, const Series& a) { return a * s; }

  // Agreement on the shared truncation window.
  friend bool operator==(const Series& a, const Series& b) {
    int n = std::min(a.n_, b.n_);
    std::optional<int> m = min_q(a.m_, b.m_);
    for (int i = 0; i <= n; ++i) {
      if (m) {
        if (!(reduce_mod_q(a.c_[i], *m) == reduce_mod_q(b.c_[i], *m))) return false;
      } else if (!(a.c_[i] == b.c_[i])) {
        return false;
      }
    }
    return true;
  }

  void set_q_order(std::optional<int> m) {
    m_ = m;
    if (m_) reduce();
  }

 private:
  static int check_order(int n) {
    if (n < 0) throw BadIndices("series t-order must be nonnegative");
    return n;
  }
  static std::optional<int> min_q(std::optional<int> a, std::optional<int> b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
  }
  static Series combine(const Series& a, const Series& b, bool add) {
    Series r(std::min(a.n_, b.n_), min_q(a.m_, b.m_));
    for (int i = 0; i <= r.n_; ++i) r.c_[i] = add ? a.c_[i] + b.c_[i] : a.c_[i] - b.c_[i];
    if (r.m_) r.reduce();
    return r;
  }
  void reduce() {
    for (auto& c : c_) c = reduce_mod_q(c, *m_);
  }

  std::vector<C> c_;
  int n_;
  std::optional<int> m_;
};

// Multiplication that refuses operands of different truncation.
template <CoefficientRing C>
Series<C> mul_strict(const Series<C>& a, const Series<C>& b) {
  if (a.t_order() != b.t_order() || a.q_order() != b.q_order())
    throw TruncationMismatch("operands of different truncation order");
  return a * b;
}

template <CoefficientRing C>
Series<C> invert(const Series<C>& a) {
  std::optional<C> inv = ring_inverse(a[0]);
  if (!inv) throw NonInvertibleConstantTerm("constant term is not a unit");
  const int n = a.t_order();
  std::vector<C> b(static_cast<std::size_t>(n) + 1, C(QScalar()));
  b[0] = *inv;
  for (int k = 1; k <= n; ++k) {
    C s(QScalar{});
    for (int j = 1; j <= k; ++j)
      if (!a[j].is_zero()) s = s + a[j] * b[k - j];
    b[k] = -(s * *inv);
    if (a.q_order()) b[k] = reduce_mod_q(b[k], *a.q_order());
  }
  return Series<C>(std::move(b), n, a.q_order());
}

// D_psi: coefficient of t^n becomes [n+1]_psi c_{n+1}; t-order drops by one.
template <CoefficientRing C>
Series<C> q_derive(const Series<C>& a, BaseExponent m = BaseExponent{}) {
  if (a.t_order() < 1) throw TruncationMismatch("q_derive needs t-order >= 1");
  std::vector<C> c;
  c.reserve(static_cast<std::size_t>(a.t_order()));
  for (int n = 0; n < a.t_order(); ++n) c.push_back(a[n + 1] * C(qint(n + 1, m)));
  return Series<C>(std::move(c), a.t_order() - 1, a.q_order());
}

// a(alpha t).
template <CoefficientRing C>
Series<C> scale_arg(const Series<C>& a, const QScalar& alpha) {
  std::vector<C> c;
  QScalar p(1);
  for (int n = 0; n <= a.t_order(); ++n) {
    c.push_back(a[n] * C(p));
    p *= alpha;
  }
  return Series<C>(std::move(c), a.t_order(), a.q_order());
}

// t^k a(t); the window grows by k.
template <CoefficientRing C>
Series<C> shift_t(const Series<C>& a, int k) {
  std::vector<C> c(static_cast<std::size_t>(k), C(QScalar()));
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  return Series<C>(std::move(c), a.t_order() + k, a.q_order());
}

// a(t^k); the window becomes k * N.
template <CoefficientRing C>
Series<C> subst_t_power(const Series<C>& a, int k) {
  Series<C> r(a.t_order() * k, a.q_order());
  for (int n = 0; n <= a.t_order(); ++n) r.set(n * k, a[n]);
  return r;
}

// Ordinary composition g(f(t)), f(0) = 0.
template <CoefficientRing C>
Series<C> compose_classical(const Series<C>& g, const Series<C>& f) {
  if (!f[0].is_zero()) throw NonzeroConstantTerm("inner series has a nonzero constant term");
  int n = std::min(g.t_order(), f.t_order());
  Series<C> ft = f.truncated(n);
  Series<C> r(n, g.q_order());
  for (int k = n; k >= 0; --k) r = r * ft + Series<C>::constant(g[k], n);
  return r;
}

template <CoefficientRing C>
Series<C> reduce_mod_q(const Series<C>& a, int M) {
  Series<C> r = a;
  r.set_q_order(M);
  return r;
}

// Series with q-truncation dropped, for comparison against exact values.
template <CoefficientRing C>
Series<C> without_q_order(const Series<C>& a) {
  return Series<C>(a.coeffs(), a.t_order());
}

template <CoefficientRing C>
Series<C> subst_q_power(const Series<C>& a, int m) {
  return a.map_coeffs([m](const C& c) { return subst_q_power(c, m); });
}

}  // namespace qsym
