#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qsym/qscalar.hpp"

namespace qsym {

// Exponent vector of a monomial e_1^{a_1} e_2^{a_2} ...; index 0 is e_1.
// No trailing zeros, so the unit monomial is empty.
using Mono = std::vector<int>;

// Terms print in this order: lexicographically larger vectors first,
// so e1^2 precedes e2.
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const;
};

int mono_degree(const Mono& m);

// Element of Lambda presented on free generators e_1, e_2, ... over Q(q).
class SymPoly {
 public:
  using Terms = std::map<Mono, QScalar, MonoOrder>;

  SymPoly() = default;
  SymPoly(long c) : SymPoly(QScalar(c)) {}  // NOLINT(google-explicit-constructor)
  SymPoly(const QScalar& c);  // NOLINT(google-explicit-constructor)

  static SymPoly e(int k);  // e_0 = 1, e_k = 0 for k < 0
  static SymPoly monomial(const Mono& m, const QScalar& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  QScalar constant_term() const;
  QScalar coeff(const Mono& m) const;
  // Largest graded degree among the terms; -1 for zero.
  int degree() const;
  bool is_homogeneous(int d) const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o);
  SymPoly& operator*=(const QScalar& s);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(SymPoly a, const QScalar& s) { return a *= s; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  // Applies f to every coefficient, dropping zeros.
  template <class F>
  SymPoly map_coeffs(F&& f) const {
    SymPoly r;
    for (const auto& [m, c] : terms_) {
      QScalar v = f(c);
      if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
  }
  void add_term(const Mono& m, const QScalar& c);

 private:
  Terms terms_;
};

std::optional<SymPoly> ring_inverse(const SymPoly& a);
SymPoly reduce_mod_q(const SymPoly& a, int M);
SymPoly subst_q_power(const SymPoly& a, int m);

// Substitutes e_k by the k-th elementary symmetric polynomial of xs.
QScalar eval_finite_variables(const SymPoly& s, const std::vector<QScalar>& xs);
// Coefficientwise evaluation at q = v.
SymPoly eval_q(const SymPoly& s, const Rational& v);

}  // namespace qsym
