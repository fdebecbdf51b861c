#include "qsym/gaussian.hpp"

#include "qsym/error.hpp"

namespace qsym {

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  QScalar r = re_ * o.re_ - im_ * o.im_;
  QScalar i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussQ GaussQ::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero Gaussian scalar");
  if (im_.is_zero()) return GaussQ(re_.inverse());
  // re^2 + im^2 has no zero in Q(q) unless both vanish
  QScalar n = (re_ * re_ + im_ * im_).inverse();
  return GaussQ(re_ * n, -im_ * n);
}

GaussQ GaussQ::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  GaussQ base = *this, r(1);
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

}  // namespace qsym
