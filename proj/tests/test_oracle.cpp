#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>

#include "qsym/oracle.hpp"

using namespace qsym;

namespace {

QScalar poly(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QScalar(Poly(std::move(r)));
}

// Tree enumerator by brute force over parent maps: each v >= 2 takes a
// parent in 1..n, kept when every vertex reaches 1.  No Pruefer codes.
QScalar trees_by_parent_maps(int n) {
  std::vector<long> c((n - 1) * (n - 2) / 2 + 1, 0);
  std::vector<int> parent(n + 1, 1);
  for (;;) {
    bool ok = true;
    for (int v = 2; v <= n && ok; ++v) {
      int a = v, steps = 0;
      while (a != 1 && steps <= n) a = parent[a], ++steps;
      ok = a == 1;
    }
    if (ok) {
      int inv = 0;
      for (int j = 2; j <= n; ++j)
        for (int a = parent[j]; a != 1; a = parent[a])
          if (a > j) ++inv;
      ++c[inv];
    }
    int v = 2;
    while (v <= n && parent[v] == n) parent[v++] = 1;
    if (v > n) break;
    ++parent[v];
  }
  return poly(c);
}

}  // namespace

TEST(Permutations, Statistics) {
  Perm p({3, 1, 2});
  EXPECT_EQ(inv(p), 2);
  EXPECT_EQ(noninv(p), 1);
  EXPECT_TRUE(p.is_basic());
  EXPECT_FALSE(Perm({1, 3, 2}).is_basic());
  EXPECT_THROW(Perm({1, 1}), std::invalid_argument);
}

TEST(Permutations, BasicDecomposition) {
  auto b = basic_decomposition(Perm({2, 1, 4, 3, 5}));
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0], (std::vector<int>{2, 1}));
  EXPECT_EQ(b[1], (std::vector<int>{4, 3}));
  EXPECT_EQ(b[2], (std::vector<int>{5}));
}

TEST(Permutations, InversionsAreMahonian) {
  for (int n = 0; n <= 7; ++n) {
    PermSums s = perm_sums(n, Weight::Unit);
    EXPECT_EQ(s.gamma, RealXPoly(qfact(n)));
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(s.perms, fact);
    if (n >= 1) {
      EXPECT_EQ(s.basics, fact / n);
    }
  }
}

TEST(Permutations, ExponentialFormulas) {
  for (Weight w : {Weight::Unit, Weight::BlockMarker}) {
    EXPECT_TRUE(verify_gessel_formula(6, w)) << weight_name(w);
    EXPECT_TRUE(verify_star_formula(6, w)) << weight_name(w);
  }
}

TEST(Permutations, TooLarge) { EXPECT_THROW(perm_sums(10, Weight::Unit), TooLarge); }

TEST(Subsets, NoninversionSumIsGaussian) {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(subset_noninv_sum(n, k), qbinom(n, k));
}

TEST(Trees, FrozenValues) {
  EXPECT_EQ(J_poly(1), QScalar(1));
  EXPECT_EQ(J_poly(2), QScalar(1));
  EXPECT_EQ(J_poly(3), poly({2, 1}));
  EXPECT_EQ(J_poly(4), poly({6, 6, 3, 1}));
}

TEST(Trees, PrueferMatchesParentMaps) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(J_poly(n), trees_by_parent_maps(n)) << n;
}

TEST(Trees, CountsAndThreads) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(eval_at(J_poly(n), 1), Rational(static_cast<long>(tree_count(n))));
  EXPECT_EQ(J_poly(7, OracleCache{}, 1), J_poly(7, OracleCache{}, 3));
  EXPECT_THROW(J_poly(9), TooLarge);
  EXPECT_THROW(J_poly(0), BadIndices);
}

TEST(Trees, PrueferDecoding) {
  LabeledTree t = tree_from_pruefer({4, 4}, 4);  // star centred at 4
  EXPECT_EQ(t.parent[4], 1);
  EXPECT_EQ(t.parent[2], 4);
  EXPECT_EQ(t.parent[3], 4);
  EXPECT_EQ(tree_inversions(t), 2);
}

TEST(Trees, Reciprocal) {
  EXPECT_EQ(J_reciprocal(3), poly({1, 2}));
  EXPECT_EQ(J_reciprocal(4), poly({1, 3, 6, 6}));
  EXPECT_THROW(tree_reciprocal(poly({0, 0, 1}), 3), BadIndices);
}

TEST(Trees, CacheRoundTrip) {
  std::filesystem::path dir = QSYM_TEST_TMPDIR;
  std::filesystem::remove_all(dir);
  OracleCache cache(dir);
  QScalar a = J_poly(6, cache);
  EXPECT_TRUE(std::filesystem::exists(dir / "J_6.json"));
  int calls = 0;
  QScalar b = cache.get("J", 6, [&] {
    ++calls;
    return QScalar();
  });
  EXPECT_EQ(calls, 0);
  EXPECT_EQ(a, b);
  std::filesystem::remove_all(dir);
}

TEST(Newton, ClassicalPowerSums) {
  SymPoly e1 = SymPoly::e(1), e2 = SymPoly::e(2), e3 = SymPoly::e(3);
  EXPECT_EQ(classical_newton_p(2), e1 * e1 - e2 * QScalar(2));
  EXPECT_EQ(classical_newton_p(3), e1 * e1 * e1 - e1 * e2 * QScalar(3) + e3 * QScalar(3));
}
