#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "qsym/qscalar.hpp"
#include "qsym/series.hpp"
#include "qsym/sympoly.hpp"
#include "qsym/xpoly.hpp"

namespace qsym {

// Permutation of {1..n} in one-line notation.
class Perm {
 public:
  explicit Perm(std::vector<int> word);
  const std::vector<int>& word() const { return w_; }
  int size() const { return static_cast<int>(w_.size()); }
  // Starts with its greatest letter.
  bool is_basic() const;

 private:
  std::vector<int> w_;
};

int inv(const Perm& p);
int noninv(const Perm& p);
// Blocks cut at the left-to-right maxima; every block is basic.
std::vector<std::vector<int>> basic_decomposition(const Perm& p);

enum class Weight {
  Unit,         // omega = 1
  BlockMarker,  // omega = x^{number of basic blocks}
};
std::string weight_name(Weight w);

// Enumeration of S_n: gamma_n = sum omega(pi) q^{I(pi)} and the
// non-inversion variant, together with the same sums over basic words.
struct PermSums {
  int n = 0;
  long long perms = 0;
  long long basics = 0;
  RealXPoly gamma, gamma_bar;
  RealXPoly f, f_bar;
};
PermSums perm_sums(int n, Weight w);

// sum gamma_n t^n/[n]! against e_q[sum f_n t^n/[n]!], and the starred
// pair with the non-inversion statistic.
bool verify_gessel_formula(int n_max, Weight w);
bool verify_star_formula(int n_max, Weight w);

// sum over k-subsets V of {1..n} of q^{#(v in V, w not in V, v < w)}.
QScalar subset_noninv_sum(int n, int k);

// Tree on {1..n} rooted at 1; parent[v] for v >= 2, parent[0] and parent[1] unused.
struct LabeledTree {
  int n = 0;
  std::vector<int> parent;
};
LabeledTree tree_from_pruefer(const std::vector<int>& code, int n);
// Pairs i > j > 1 with i on the path from 1 to j.
int tree_inversions(const LabeledTree& t);

// Optional on-disk cache of oracle polynomials, one JSON file per (kind, n).
class OracleCache {
 public:
  OracleCache() = default;
  explicit OracleCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  QScalar get(const std::string& kind, int n, const std::function<QScalar()>& compute) const;

 private:
  std::filesystem::path dir_;
};

// J_n(q) = sum over trees of q^{inv}; n <= 8.  `threads` = 0 picks the
// hardware concurrency.
QScalar J_poly(int n, const OracleCache& cache = OracleCache{}, unsigned threads = 0);
long long tree_count(int n);
// q^{binom(n-1,2)} J_n(1/q).
QScalar J_reciprocal(int n, const OracleCache& cache = OracleCache{});
// Involution q^{binom(n-1,2)} p(1/q) on polynomials of that degree bound.
QScalar tree_reciprocal(const QScalar& p, int n);

// Classical p_n in the e-generators (Newton's identities, integer coefficients).
SymPoly classical_newton_p(int n);

}  // namespace qsym
