#pragma once

#include <sstream>
#include <string>

#include "qsym/gaussian.hpp"
#include "qsym/partition.hpp"
#include "qsym/qscalar.hpp"
#include "qsym/series.hpp"
#include "qsym/sympoly.hpp"
#include "qsym/xpoly.hpp"

namespace qsym {

// Plain text.  Terms are joined with " + " / " − " (U+2212); a scalar
// coefficient is joined to its monomial with "·".
std::string to_text(const Rational& r);
std::string to_text(const Poly& p);
std::string to_text(const QScalar& s);
std::string to_text(const GaussQ& g);
std::string to_text(const SymPoly& s);
std::string to_text(const RealXPoly& p);
std::string to_text(const GaussXPoly& p);
std::string mono_text(const Mono& m);

std::string to_latex(const QScalar& s);
std::string to_latex(const SymPoly& s);
std::string to_latex(const RealXPoly& p);
std::string to_latex(const Partition& p);

template <CoefficientRing C>
std::string to_text(const Series<C>& s) {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= s.t_order(); ++n) {
    if (s[n].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_text(s[n]) << ")";
    if (n == 1) os << "·t";
    if (n > 1) os << "·t^" << n;
  }
  if (first) os << "0";
  os << " + O(t^" << s.t_order() + 1 << ")";
  if (s.q_order()) os << " mod q^" << *s.q_order();
  return os.str();
}

}  // namespace qsym
