#include "qsym/report.hpp"

#include <sstream>

namespace qsym {

std::string Difference::describe() const {
  std::ostringstream os;
  os << "first difference at";
  if (t_power >= 0) os << " t^" << t_power << ",";
  if (!monomial.empty()) os << " monomial " << monomial << ",";
  os << " q^" << q_power << ": lhs = " << lhs << ", rhs = " << rhs;
  return os.str();
}

Location locate(const QScalar& d) { return {"", d.is_zero() ? 0 : q_valuation(d)}; }

Location locate(const GaussQ& d) {
  if (!d.re().is_zero()) return locate(d.re());
  Location l = locate(d.im());
  l.monomial = "i";
  return l;
}

Location locate(const SymPoly& d) {
  if (d.is_zero()) return {};
  const auto& [m, c] = *d.terms().begin();
  Location l = locate(c);
  l.monomial = m.empty() ? "1" : mono_text(m);
  return l;
}

Location locate(const RealXPoly& d) {
  for (int k = d.degree(); k >= 0; --k)
    if (!d.coeff(k).is_zero()) {
      Location l = locate(d.coeff(k));
      l.monomial = "x^" + std::to_string(k);
      return l;
    }
  return {};
}

Location locate(const GaussXPoly& d) {
  for (int k = d.degree(); k >= 0; --k)
    if (!d.coeff(k).is_zero()) {
      Location l = locate(d.coeff(k));
      l.monomial = "x^" + std::to_string(k) + (l.monomial.empty() ? "" : "·" + l.monomial);
      return l;
    }
  return {};
}

std::string format_line(const CheckResult& r) {
  std::string s = (r.passed ? "PASS " : "FAIL ") + r.name;
  if (!r.params.empty()) s += " [" + r.params + "]";
  if (!r.passed && !r.detail.empty()) s += ": " + r.detail;
  return s;
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results) {
  int failed = 0;
  for (const auto& r : results) {
    os << format_line(r) << "\n";
    if (!r.passed) ++failed;
  }
  os << (failed ? "FAILED " : "OK ") << results.size() - failed << "/" << results.size() << " checks passed\n";
}

}  // namespace qsym
