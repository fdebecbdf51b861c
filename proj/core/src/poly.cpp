#include "qsym/poly.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include "qsym/error.hpp"

namespace qsym {

namespace {
const Rational kZero(0);
}

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const Rational& c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  // callers may hand in uncanonicalized mpq values
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, kZero);
  p.c_[k] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

const Rational& Poly::lead() const { return c_.empty() ? kZero : c_.back(); }

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.c_.size() == 1) return b * a.c_[0];
  if (b.c_.size() == 1) return a * b.c_[0];
  r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r.c_[i + j] += t;
    }
  }
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  if (c == 1) return *this;
  for (auto& x : c_) x *= c;
  return *this;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  rem = a;
  quo = Poly();
  int db = b.degree();
  if (rem.degree() < db) return;
  quo.c_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, kZero);
  Rational inv_lead = 1 / b.lead();
  Rational t;
  for (int d = rem.degree(); d >= db; --d) {
    const Rational& top = rem.c_[d];
    if (top == 0) continue;
    Rational f = top * inv_lead;
    quo.c_[d - db] = f;
    for (int j = 0; j <= db; ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), b.c_[j].get_mpq_t());
      rem.c_[d - db + j] -= t;
    }
  }
  rem.trim();
  quo.trim();
}

Poly Poly::divexact(const Poly& b) const {
  if (b.is_constant()) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    return *this * (1 / b.c_[0]);
  }
  Poly q, r;
  divmod(*this, b, q, r);
  assert(r.is_zero());
  return q;
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return *this * (1 / c_.back());
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  // q^k factors are common in this code base; peel them off first
  int va = a.valuation(), vb = b.valuation();
  int v = std::min(va, vb);
  Poly x = a.unshifted(va), y = b.unshifted(vb);
  if (x.degree() < y.degree()) std::swap(x, y);
  x = x.monic();
  y = y.monic();
  Poly quo, rem;
  while (!y.is_zero()) {
    if (y.is_constant()) {
      x = Poly(1);
      break;
    }
    divmod(x, y, quo, rem);
    x = std::move(y);
    y = rem.monic();
  }
  return x.shifted(v);
}

Rational Poly::eval(const Rational& v) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= v;
    r += *it;
  }
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
  if (c_.empty() || k == 0) return *this;
  Poly r;
  r.c_.assign(static_cast<std::size_t>(k), kZero);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::unshifted(int k) const {
  if (k <= 0 || c_.empty()) return *this;
  if (valuation() < k) throw std::invalid_argument("Poly::unshifted: not divisible");
  Poly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Poly Poly::compose_power(int m) const {
  if (m < 1) throw std::invalid_argument("Poly::compose_power: m must be >= 1");
  if (m == 1 || c_.size() <= 1) return *this;
  Poly r;
  r.c_.assign(static_cast<std::size_t>(degree()) * m + 1, kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
  return r;
}

Poly Poly::reversed(int d) const {
  if (c_.empty()) return *this;
  if (d < degree()) throw std::invalid_argument("Poly::reversed: d below degree");
  Poly r;
  r.c_.assign(static_cast<std::size_t>(d) + 1, kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[d - i] = c_[i];
  r.trim();
  return r;
}

Poly Poly::truncated(int M) const {
  if (static_cast<int>(c_.size()) <= M) return *this;
  Poly r;
  if (M <= 0) return r;
  r.c_.assign(c_.begin(), c_.begin() + M);
  r.trim();
  return r;
}

Poly Poly::inverse_mod(int M) const {
  if (coeff(0) == 0) throw NotPolynomialInQ("inverse mod q^M of a series without constant term");
  Poly r;
  if (M <= 0) return r;
  r.c_.assign(static_cast<std::size_t>(M), kZero);
  Rational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  Rational s, t;
  for (int n = 1; n < M; ++n) {
    s = 0;
    int lim = std::min(n, degree());
    for (int k = 1; k <= lim; ++k) {
      if (c_[k] == 0 || r.c_[n - k] == 0) continue;
      mpq_mul(t.get_mpq_t(), c_[k].get_mpq_t(), r.c_[n - k].get_mpq_t());
      s += t;
    }
    r.c_[n] = -s * inv0;
  }
  r.trim();
  return r;
}

std::size_t Poly::hash() const {
  std::size_t h = c_.size();
  std::hash<std::string> hs;
  for (const auto& c : c_) h = h * 1000003u ^ hs(c.get_str());
  return h;
}

}  // namespace qsym
