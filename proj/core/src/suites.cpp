#include "qsym/suites.hpp"

#include <functional>
#include <future>
#include <random>

#include "qsym/hermite.hpp"
#include "qsym/partition.hpp"
#include "qsym/qcalculus.hpp"
#include "qsym/specializations.hpp"
#include "qsym/symfun.hpp"

namespace qsym {

namespace {

using Suite = std::function<std::vector<CheckResult>(const SuiteConfig&)>;

std::string np(int n) { return "n=" + std::to_string(n); }
std::string nm(int n, BaseExponent m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m.value()); }
std::string seed_param(const SuiteConfig& c, int i) {
  return "seed=" + std::to_string(c.seed) + " F#" + std::to_string(i);
}

constexpr int kRandomCount = 5;

std::vector<CheckResult> girard(const SuiteConfig& c) {
  const int N = c.max_n.value_or(10);
  std::vector<CheckResult> out;
  PowerSource src = default_powers(c.base);
  if (c.perturb_p > 0) src = perturbed_powers(src, c.perturb_p);
  for (int n = 1; n <= N; ++n) {
    out.push_back(check_equal("girard-e", nm(n, c.base), girard_e_residual(n, c.base, src), SymPoly()));
    out.push_back(check_equal("girard-h", nm(n, c.base), girard_h_residual(n, c.base, src), SymPoly()));
  }
  return out;
}

std::vector<CheckResult> determinants(const SuiteConfig& c) {
  const int N = c.max_n.value_or(7);
  std::vector<CheckResult> out;
  for (BaseExponent m : {c.base, c.base.inverse()}) {
    for (int n = 1; n <= N; ++n) {
      SymPoly p = q_power(n, m);
      out.push_back(check_equal("det-power-from-e", nm(n, m), q_power_det(n, m), p));
      out.push_back(check_equal("det-e-from-power", nm(n, m), e_det_from_p(n, m), SymPoly::e(n)));
      out.push_back(check_equal("det-power-from-h", nm(n, m), p_det_from_h(n, m), p));
      out.push_back(check_equal("det-h-from-power", nm(n, m), h_det_from_p(n, m), h_poly(n)));
      for (int r = 1; r <= n; ++r)
        out.push_back(check_equal("det-power-r", nm(n, m) + " r=" + std::to_string(r), q_power_r(n, r, m),
                                  q_power_r_solve(n, r, m)));
    }
  }
  return out;
}

std::vector<CheckResult> partition_expansions(const SuiteConfig& c) {
  const int N = c.max_n.value_or(8);
  std::vector<CheckResult> out;
  for (int n = 1; n <= N; ++n) {
    out.push_back(check_equal("e-partition-expansion", nm(n, c.base), e_expansion(n, c.base), SymPoly::e(n)));
    out.push_back(check_equal("h-partition-expansion", nm(n, c.base), h_expansion(n, c.base), h_poly(n)));
  }
  for (int n = 1; n <= std::min(N, 7); ++n) {
    out.push_back(check_equal("e-chain-sum", nm(n, c.base), lemma_sum_e(n, c.base),
                              SymPoly::e(n) * qfact(n, c.base)));
    out.push_back(check_equal("h-chain-sum", nm(n, c.base), lemma_sum_h(n, c.base), h_poly(n) * qfact(n, c.base)));
  }
  for (int n = 1; n <= N; ++n) {
    for (const Partition& p : partitions_of(n)) {
      QScalar z(Rational(static_cast<long>(z_classical(p))));
      out.push_back(check_equal("z-at-q-1", to_text(p), QScalar(eval_at(q_z(p), 1)), z));
      out.push_back(check_equal("z-h-at-q-1", to_text(p), QScalar(eval_at(q_z_h(p), 1)), z));
    }
    out.push_back(check_equal("power-at-q-1", np(n), eval_q(q_power(n), 1), classical_newton_p(n)));
  }
  return out;
}

std::vector<CheckResult> exp_formulas(const SuiteConfig& c) {
  const int N = c.t_order;
  const std::string pN = "N=" + std::to_string(N);
  std::vector<CheckResult> out;
  Series<SymPoly> P = P_series(N);
  out.push_back(check_equal("E-as-q-composition", pN, gessel_exp(-negate_arg(P)), e_series(N)));
  out.push_back(check_equal("H-as-q-star-composition", pN, star_exp(P), h_from_e(N)));
  for (int i = 0; i < kRandomCount; ++i) {
    Series<QScalar> F = random_series(c.seed, i, N);
    out.push_back(check_equal("e-recurrence-vs-powers", seed_param(c, i), gessel_exp(F, c.base),
                              q_compose(e_q_series(N, c.base), F, c.base)));
    out.push_back(check_equal("E-star-recurrence-vs-powers", seed_param(c, i), star_exp(F, c.base),
                              q_star_compose(E_q_series(N, c.base), F, c.base)));
  }
  const int perm_n = std::min(c.max_n.value_or(6), 8);
  for (int n = 0; n <= perm_n; ++n)
    out.push_back(check_equal("permutation-inversions-unit", np(n), perm_sums(n, Weight::Unit).gamma,
                              RealXPoly(qfact(n))));
  for (Weight w : {Weight::Unit, Weight::BlockMarker}) {
    out.push_back(check_true("permutation-exponential-formula", weight_name(w) + " n<=" + std::to_string(perm_n),
                             verify_gessel_formula(perm_n, w)));
    out.push_back(check_true("permutation-star-formula", weight_name(w) + " n<=" + std::to_string(perm_n),
                             verify_star_formula(perm_n, w)));
  }
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      out.push_back(check_equal("subset-noninversions", np(n) + " k=" + std::to_string(k), subset_noninv_sum(n, k),
                                qbinom(n, k)));
  return out;
}

std::vector<CheckResult> link(const SuiteConfig& c) {
  const int N = c.t_order;
  std::vector<CheckResult> out;
  for (int m : {1, 2}) {
    BaseExponent b(m);
    for (int i = 0; i < kRandomCount; ++i) {
      Series<QScalar> F = random_series(c.seed, i, N);
      for (int k = 0; k <= 6; ++k)
        out.push_back(check_equal("star-power-vs-inverse-base",
                                  seed_param(c, i) + " m=" + std::to_string(m) + " k=" + std::to_string(k),
                                  q_star_power(F, k, b), q_bracket_power(F, k, b.inverse())));
    }
  }
  const std::string pN = "N=" + std::to_string(N);
  for (int i = 0; i < kRandomCount; ++i) {
    Series<QScalar> F = random_series(c.seed, i, N);
    out.push_back(check_equal("star-exp-vs-inverse-base-exp", seed_param(c, i), star_exp(F),
                              gessel_exp(F, BaseExponent(-1))));
  }
  out.push_back(
      check_equal("star-exp-vs-inverse-base-exp", "F=P " + pN, star_exp(P_series(N)), gessel_exp(P_series(N), BaseExponent(-1))));
  return out;
}

std::vector<CheckResult> products(const SuiteConfig& c) {
  std::vector<CheckResult> out;
  {
    const int N = 6, M = 8;  // Lambda products mod (q^8, t^7)
    const std::string p = "N=" + std::to_string(N) + " M=" + std::to_string(M);
    Series<SymPoly> P = P_series(N);
    out.push_back(check_equal("E-product", p, qproduct_e(-negate_arg(P), BaseExponent{}, N, M),
                              reduce_mod_q(e_series(N), M)));
    out.push_back(check_equal("H-product", p, qproduct_E(P, BaseExponent{}, N, M), reduce_mod_q(h_from_e(N), M)));
  }
  {
    const int N = c.t_order;
    Series<SymPoly> P = P_series(N);
    out.push_back(check_true("E-one-step", "N=" + std::to_string(N), verify_one_step_e(-negate_arg(P))));
    out.push_back(check_true("H-one-step", "N=" + std::to_string(N), verify_one_step_E(P)));
  }
  for (int i = 0; i < kRandomCount; ++i) {
    Series<QScalar> F = random_series(c.seed, i, c.t_order);
    out.push_back(check_true("exp-reciprocal", seed_param(c, i), verify_reciprocal(F)));
    out.push_back(check_true("e-one-step", seed_param(c, i), verify_one_step_e(F)));
    out.push_back(check_true("E-one-step", seed_param(c, i), verify_one_step_E(F)));
  }
  {
    const int N = c.t_order, M = c.q_order;
    const std::string p = "N=" + std::to_string(N) + " M=" + std::to_string(M);
    Series<QScalar> t = Series<QScalar>::t(N);
    out.push_back(check_equal("e-q-product", p, qproduct_e(t, BaseExponent{}, N, M), reduce_mod_q(e_q_series(N), M)));
    out.push_back(check_equal("E-q-product", p, qproduct_E(t, BaseExponent{}, N, M), reduce_mod_q(E_q_series(N), M)));
  }
  return out;
}

std::vector<CheckResult> qbinomial(const SuiteConfig& c) {
  const int N = c.t_order, M = c.q_order;
  const std::string p = "N=" + std::to_string(N) + " M=" + std::to_string(M);
  std::vector<CheckResult> out;
  auto add = [&](const std::string& a, const QBinomialReport& r) {
    out.push_back(check_true("qbinomial-sum-vs-exponential", "a=" + a + " " + p, r.sum_vs_exp));
    out.push_back(check_true("qbinomial-sum-vs-product", "a=" + a + " " + p, r.sum_vs_product));
    out.push_back(check_true("qbinomial-extraction", "a=" + a + " " + p, r.extraction));
  };
  add("x", qbinomial_check(RealXPoly::x(), N, M));
  add("0", qbinomial_check(QScalar(), N, M));
  add("q", qbinomial_check(QScalar::q(), N, M));
  {
    Series<QScalar> euler(N, M);
    for (int n = 0; n <= N; ++n) euler.set(n, qpochhammer(QScalar::q(), n).inverse());
    out.push_back(check_equal("qbinomial-euler", p, qbinomial_product_route(QScalar(), N, M), euler));
    out.push_back(check_equal("qbinomial-geometric", "N=" + std::to_string(N), qbinomial_sum(QScalar::q(), N),
                              Series<QScalar>(std::vector<QScalar>(N + 1, QScalar(1)), N)));
  }
  const int E = c.max_n.value_or(10);
  auto s = specialize(Mode::E, qbinomial_sum(RealXPoly::x(), E));
  for (int n = 1; n <= E; ++n)
    out.push_back(check_equal("qbinomial-closed-form-power", np(n), s.extracted_p[n], qbinomial_power(RealXPoly::x(), n)));
  return out;
}

std::vector<CheckResult> trees(const SuiteConfig& c) { return tree_identities(c.max_n.value_or(7), c.cache); }

std::vector<CheckResult> hermite(const SuiteConfig& c) {
  return hermite_checks(c.max_n.value_or(8), std::min(c.max_n.value_or(6), 6), c.t_order, std::min(c.t_order, 7));
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r = {
      {"girard", girard},
      {"determinants", determinants},
      {"partition-expansions", partition_expansions},
      {"exp-formulas", exp_formulas},
      {"link", link},
      {"products", products},
      {"qbinomial", qbinomial},
      {"trees", trees},
      {"hermite", hermite},
  };
  return r;
}

std::vector<CheckResult> run_guarded(const std::string& name, const Suite& s, const SuiteConfig& c) {
  try {
    return s(c);
  } catch (const std::exception& e) {
    return {CheckResult{name, "", false, std::string("exception: ") + e.what()}};
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, s] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "all") {
    // per-suite max_n defaults apply; a global --max-n would make no sense across suites
    SuiteConfig c = cfg;
    c.max_n.reset();
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (const auto& [n, s] : registry())
      jobs.push_back(std::async(std::launch::async, [&, n = n, s = s] { return run_guarded(n, s, c); }));
    std::vector<CheckResult> out;
    for (auto& j : jobs) {
      auto r = j.get();
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  for (const auto& [n, s] : registry())
    if (n == name) return run_guarded(n, s, cfg);
  throw BadIndices("unknown suite '" + name + "'");
}

Series<QScalar> random_series(std::uint64_t seed, int index, int N) {
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
  // raw engine output only, so the draws do not depend on the standard library
  auto small = [&] { return static_cast<long>(rng() % 7) - 3; };
  Series<QScalar> F(N);
  for (int n = 1; n <= N; ++n) {
    std::vector<Rational> c;
    for (int d = 0; d <= 2; ++d) c.emplace_back(small());
    if (n == 1 && c[0] == 0) c[0] = 1;
    F.set(n, QScalar(Poly(std::move(c))));
  }
  return F;
}

}  // namespace qsym
