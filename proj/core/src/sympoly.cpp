#include "qsym/sympoly.hpp"

#include <algorithm>

namespace qsym {

bool MonoOrder::operator()(const Mono& a, const Mono& b) const {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

int mono_degree(const Mono& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(i + 1) * m[i];
  return d;
}

SymPoly::SymPoly(const QScalar& c) {
  if (!c.is_zero()) terms_.emplace(Mono{}, c);
}

SymPoly SymPoly::e(int k) {
  if (k < 0) return SymPoly();
  if (k == 0) return SymPoly(1);
  Mono m(static_cast<std::size_t>(k), 0);
  m[k - 1] = 1;
  return monomial(m, QScalar(1));
}

SymPoly SymPoly::monomial(const Mono& m, const QScalar& c) {
  SymPoly r;
  r.add_term(m, c);
  return r;
}

void SymPoly::add_term(const Mono& m0, const QScalar& c) {
  if (c.is_zero()) return;
  Mono m = m0;
  while (!m.empty() && m.back() == 0) m.pop_back();
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool SymPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

QScalar SymPoly::constant_term() const { return coeff(Mono{}); }

QScalar SymPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QScalar() : it->second;
}

int SymPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

bool SymPoly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) != d) return false;
  return true;
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_constant()) return b * a.constant_term();
  if (b.is_constant()) return a * b.constant_term();
  Mono m;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      m.assign(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) { return *this = *this * o; }

SymPoly& SymPoly::operator*=(const QScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::optional<SymPoly> ring_inverse(const SymPoly& a) {
  if (a.is_constant() && !a.is_zero()) return SymPoly(a.constant_term().inverse());
  return std::nullopt;
}

SymPoly reduce_mod_q(const SymPoly& a, int M) {
  return a.map_coeffs([M](const QScalar& c) { return reduce_mod_q(c, M); });
}

SymPoly subst_q_power(const SymPoly& a, int m) {
  return a.map_coeffs([m](const QScalar& c) { return subst_q_power(c, m); });
}

QScalar eval_finite_variables(const SymPoly& s, const std::vector<QScalar>& xs) {
  // elementary symmetric polynomials of xs
  std::vector<QScalar> el(xs.size() + 1);
  el[0] = QScalar(1);
  for (const auto& x : xs)
    for (std::size_t k = xs.size(); k >= 1; --k) el[k] += el[k - 1] * x;
  QScalar r;
  for (const auto& [m, c] : s.terms()) {
    QScalar t = c;
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] == 0) continue;
      QScalar ek = (i + 1 < el.size()) ? el[i + 1] : QScalar();
      t *= ek.pow(m[i]);
    }
    r += t;
  }
  return r;
}

SymPoly eval_q(const SymPoly& s, const Rational& v) {
  return s.map_coeffs([&v](const QScalar& c) { return QScalar(eval_at(c, v)); });
}

}  // namespace qsym
