#include <gtest/gtest.h>

#include <set>

#include "qsym/error.hpp"
#include "qsym/partition.hpp"

using namespace qsym;

namespace {

QScalar q() { return QScalar::q(); }

// Brute-force partitions by recursion on the largest part.
void gen(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    gen(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(Partition, SortsAndValidates) {
  Partition p({1, 3, 1});
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.length(), 3);
  EXPECT_EQ(p.multiplicity(1), 2);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(Partition, EnumerationMatchesBruteForce) {
  for (int n = 0; n <= 12; ++n) {
    std::vector<std::vector<int>> ref;
    std::vector<int> cur;
    gen(n, n, cur, ref);
    auto ps = partitions_of(n);
    ASSERT_EQ(ps.size(), ref.size());
    EXPECT_EQ(static_cast<long long>(ps.size()), partition_count(n));
    for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(ps[i].parts(), ref[i]);
  }
  EXPECT_EQ(partition_count(30), 5604);
}

TEST(Partition, ClassicalZ) {
  EXPECT_EQ(z_classical(Partition({1, 1, 1})), 6);
  EXPECT_EQ(z_classical(Partition({2, 1})), 2);
  EXPECT_EQ(z_classical(Partition({2, 2})), 8);
  // sum of n!/z = n!
  for (int n = 1; n <= 8; ++n) {
    mpq_class s = 0;
    for (const auto& p : partitions_of(n)) s += mpq_class(1, static_cast<long>(z_classical(p)));
    EXPECT_EQ(s, 1);
  }
}

TEST(Partition, ConjugateIsInvolution) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
}

TEST(Partition, Statistics) {
  EXPECT_EQ(epsilon(Partition({2, 1})), -1);
  EXPECT_EQ(epsilon(Partition({1, 1})), 1);
  EXPECT_EQ(n_stat(Partition({3, 2, 1})), 0 * 3 + 1 * 2 + 2 * 1);
}

TEST(Partition, DistinctPermutations) {
  auto u = distinct_permutations(Partition({2, 1, 1}));
  ASSERT_EQ(u.size(), 3u);
  EXPECT_EQ(u[0].parts(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(u[2].parts(), (std::vector<int>{1, 1, 2}));
  std::set<std::vector<int>> seen;
  for (const auto& c : distinct_permutations(Partition({3, 2, 2, 1}))) seen.insert(c.parts());
  EXPECT_EQ(seen.size(), 12u);
}

TEST(QZ, SmallValues) {
  EXPECT_EQ(q_z(Partition({1})), QScalar(1));
  EXPECT_EQ(q_z(Partition({2})), qint(2));
  EXPECT_EQ(q_z(Partition({1, 1})), qint(2));
  // arrangements (2,1), (1,2): 1/([3][1]) + 1/([3][2]) = (2 + q)/([2][3])
  EXPECT_EQ(q_z(Partition({2, 1})), qint(2) * qint(3) / (QScalar(2) + q()));
}

TEST(QZ, DualForm) {
  // the only arrangement of (1,1) gives [z]_{1/q} = [2]_{1/q} = (1 + q)/q
  EXPECT_EQ(q_z_h(Partition({1, 1})), (QScalar(1) + q()) / q());
  EXPECT_EQ(q_z_h(Partition({2})), QScalar(1) + q());
}

TEST(QZ, BaseChangeIsSubstitution) {
  for (int m : {2, 3})
    for (const auto& p : partitions_of(5)) EXPECT_EQ(q_z(p, BaseExponent(m)), subst_q_power(q_z(p), m));
}

TEST(QZ, EmptyPartitionThrows) {
  EXPECT_THROW(q_z(Partition()), EmptyPartition);
  EXPECT_THROW(q_z_h(Partition()), EmptyPartition);
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(parse_partition("3, 1,1"), Partition({3, 1, 1}));
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_EQ(to_text(Partition({4, 2})), "4,2");
  EXPECT_THROW(parse_partition("2,x"), ParseError);
  EXPECT_THROW(parse_partition("2,-1"), ParseError);
}
