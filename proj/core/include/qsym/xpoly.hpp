#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/gaussian.hpp"
#include "qsym/qscalar.hpp"

namespace qsym {

// Polynomial in an external variable x over K (QScalar or GaussQ).
template <class K>
class XPoly {
 public:
  XPoly() = default;
  XPoly(long c) : XPoly(K(c)) {}  // NOLINT(google-explicit-constructor)
  XPoly(const K& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  XPoly(const QScalar& c)  // NOLINT(google-explicit-constructor)
    requires(!std::same_as<K, QScalar>)
      : XPoly(K(c)) {}
  explicit XPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static XPoly x() { return monomial(K(1), 1); }
  static XPoly monomial(const K& c, int k) {
    XPoly r;
    if (c.is_zero()) return r;
    r.c_.assign(static_cast<std::size_t>(k) + 1, K());
    r.c_[k] = c;
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(); }
  K lead() const { return c_.empty() ? K() : c_.back(); }

  XPoly operator-() const {
    XPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  XPoly& operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }
  XPoly& operator*=(const XPoly& o) { return *this = *this * o; }
  XPoly& scale(const K& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend bool operator==(const XPoly&, const XPoly&) = default;

  // Quotient by b, which must divide *this exactly over K.
  XPoly divexact(const XPoly& b) const {
    if (b.is_zero()) throw DivisionByZero("XPoly division by zero");
    if (is_zero()) return XPoly();
    K inv = b.lead().inverse();
    std::vector<K> rem = c_;
    int db = b.degree();
    int dq = degree() - db;
    if (dq < 0) throw std::logic_error("XPoly::divexact: inexact division");
    std::vector<K> quo(static_cast<std::size_t>(dq) + 1);
    for (int d = degree(); d >= db; --d) {
      if (rem[d].is_zero()) continue;
      K f = rem[d] * inv;
      quo[d - db] = f;
      for (int j = 0; j <= db; ++j)
        if (!b.c_[j].is_zero()) rem[d - db + j] -= f * b.c_[j];
    }
    for (int i = 0; i < db; ++i)
      if (!rem[i].is_zero()) throw std::logic_error("XPoly::divexact: inexact division");
    return XPoly(std::move(quo));
  }

  // p(alpha * x).
  XPoly scale_x(const K& alpha) const {
    XPoly r = *this;
    K p(1);
    for (auto& c : r.c_) {
      c *= p;
      p *= alpha;
    }
    r.trim();
    return r;
  }

  K eval(const K& v) const {
    K r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
XPoly<K> operator*(const XPoly<K>& a, const K& s) {
  XPoly<K> r = a;
  return r.scale(s);
}

template <class K>
std::optional<XPoly<K>> ring_inverse(const XPoly<K>& a) {
  if (a.is_constant() && !a.is_zero()) return XPoly<K>(a.coeff(0).inverse());
  return std::nullopt;
}

template <class K>
XPoly<K> reduce_mod_q(const XPoly<K>& a, int M) {
  std::vector<K> c;
  c.reserve(a.coeffs().size());
  for (const auto& k : a.coeffs()) c.push_back(reduce_mod_q(k, M));
  return XPoly<K>(std::move(c));
}

using RealXPoly = XPoly<QScalar>;
using GaussXPoly = XPoly<GaussQ>;

// Gaussian polynomial to real one; throws NonRealResult if any imaginary part.
inline RealXPoly real_part_checked(const GaussXPoly& p) {
  std::vector<QScalar> c;
  for (const auto& g : p.coeffs()) {
    if (!g.is_real()) throw NonRealResult("polynomial has a nonzero imaginary coefficient");
    c.push_back(g.re());
  }
  return RealXPoly(std::move(c));
}

inline GaussXPoly to_gauss(const RealXPoly& p) {
  std::vector<GaussQ> c;
  for (const auto& k : p.coeffs()) c.emplace_back(k);
  return GaussXPoly(std::move(c));
}

}  // namespace qsym
