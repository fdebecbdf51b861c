#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsym/oracle.hpp"
#include "qsym/qnumbers.hpp"
#include "qsym/report.hpp"
#include "qsym/series.hpp"

namespace qsym {

inline constexpr std::uint64_t kDefaultSeed = 20240901;

struct SuiteConfig {
  std::optional<int> max_n;  // per-suite default when unset
  int t_order = 8;
  int q_order = 10;
  BaseExponent base;
  std::uint64_t seed = kDefaultSeed;
  int perturb_p = 0;  // test hook: corrupt [p_k] in the Girard suite
  OracleCache cache;
};

// Names in declaration order, "all" excluded.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite, or every suite for "all" (concurrently, results kept in
// declaration order).  Throws BadIndices for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg);

// Random F with F(0) = 0 and small integer q-polynomial coefficients.
Series<QScalar> random_series(std::uint64_t seed, int index, int N);

}  // namespace qsym
