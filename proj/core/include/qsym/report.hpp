#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qsym/render.hpp"
#include "qsym/series.hpp"

namespace qsym {

struct CheckResult {
  std::string name;
  std::string params;
  bool passed = false;
  std::string detail;  // first difference on failure
};

// Position of the first disagreement between two values.
struct Difference {
  int t_power = -1;       // -1 when the values are not series
  std::string monomial;   // e-monomial or x-power, empty for scalars
  int q_power = 0;        // lowest q-exponent in the difference
  std::string lhs, rhs;   // the differing coefficients, rendered
  std::string describe() const;
};

// Address inside a nonzero difference d = a - b.
struct Location {
  std::string monomial;
  int q_power = 0;
};
Location locate(const QScalar& d);
Location locate(const GaussQ& d);
Location locate(const SymPoly& d);
Location locate(const RealXPoly& d);
Location locate(const GaussXPoly& d);

template <class T>
std::optional<Difference> first_difference(const T& a, const T& b) {
  if (a == b) return std::nullopt;
  Location loc = locate(a - b);
  Difference d;
  d.monomial = loc.monomial;
  d.q_power = loc.q_power;
  d.lhs = to_text(a);
  d.rhs = to_text(b);
  return d;
}

template <CoefficientRing C>
std::optional<Difference> first_difference(const Series<C>& a, const Series<C>& b) {
  int n = std::min(a.t_order(), b.t_order());
  std::optional<int> m = a.q_order() ? a.q_order() : b.q_order();
  if (a.q_order() && b.q_order()) m = std::min(*a.q_order(), *b.q_order());
  for (int i = 0; i <= n; ++i) {
    C x = m ? reduce_mod_q(a[i], *m) : a[i];
    C y = m ? reduce_mod_q(b[i], *m) : b[i];
    if (x == y) continue;
    Location loc = locate(x - y);
    Difference d;
    d.t_power = i;
    d.monomial = loc.monomial;
    d.q_power = loc.q_power;
    d.lhs = to_text(x);
    d.rhs = to_text(y);
    return d;
  }
  return std::nullopt;
}

template <class T>
CheckResult check_equal(std::string name, std::string params, const T& lhs, const T& rhs) {
  CheckResult r{std::move(name), std::move(params), true, {}};
  if (auto d = first_difference(lhs, rhs)) {
    r.passed = false;
    r.detail = d->describe();
  }
  return r;
}

inline CheckResult check_true(std::string name, std::string params, bool ok, std::string detail = {}) {
  return CheckResult{std::move(name), std::move(params), ok, ok ? std::string() : std::move(detail)};
}

// Runs f, turning an exception into a failed check.
template <class F>
CheckResult guarded(const std::string& name, const std::string& params, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return CheckResult{name, params, false, std::string("exception: ") + e.what()};
  }
}

std::string format_line(const CheckResult& r);
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace qsym
