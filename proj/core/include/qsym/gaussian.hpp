#pragma once

#include <optional>

#include "qsym/qscalar.hpp"

namespace qsym {

// re + i*im with i^2 = -1 over Q(q).
class GaussQ {
 public:
  GaussQ() = default;
  GaussQ(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussQ(const QScalar& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussQ(QScalar re, QScalar im) : re_(std::move(re)), im_(std::move(im)) {}
  static GaussQ i() { return GaussQ(QScalar(), QScalar(1)); }

  const QScalar& re() const { return re_; }
  const QScalar& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussQ operator-() const { return GaussQ(-re_, -im_); }
  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  GaussQ& operator*=(const GaussQ& o);
  GaussQ& operator/=(const GaussQ& o) { return *this *= o.inverse(); }
  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend bool operator==(const GaussQ&, const GaussQ&) = default;

  GaussQ conj() const { return GaussQ(re_, -im_); }
  GaussQ inverse() const;
  GaussQ pow(int k) const;

 private:
  QScalar re_;
  QScalar im_;
};

inline std::optional<GaussQ> ring_inverse(const GaussQ& a) {
  if (a.is_zero()) return std::nullopt;
  return a.inverse();
}

inline GaussQ reduce_mod_q(const GaussQ& a, int M) {
  return GaussQ(reduce_mod_q(a.re(), M), reduce_mod_q(a.im(), M));
}

}  // namespace qsym
