#pragma once

#include <string>
#include <vector>

#include "qsym/qnumbers.hpp"

namespace qsym {

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  // Sorts and validates; throws std::invalid_argument on parts < 1.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }  // l(lambda)
  bool empty() const { return parts_.empty(); }
  int multiplicity(int i) const;  // m_i(lambda)

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Strict composition: positive parts in any order.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// Number of partitions of n via Euler's pentagonal recurrence.
long long partition_count(int n);

long long z_classical(const Partition& p);
int epsilon(const Partition& p);
Partition conjugate(const Partition& p);
int n_stat(const Partition& p);
int n_stat_comp(const Composition& u);

// Distinct rearrangements, in lexicographically decreasing order.
std::vector<Composition> distinct_permutations(const Partition& p);

// [z_lambda] in base q^m; throws EmptyPartition.
QScalar q_z(const Partition& p, BaseExponent m = BaseExponent{});
// psi^{|lambda| - l(lambda)} [z_lambda]_{psi^{-1}}; throws EmptyPartition.
QScalar q_z_h(const Partition& p, BaseExponent m = BaseExponent{});

std::string to_text(const Partition& p);
// Parses "3,1,1" (whitespace tolerated); empty string is the empty partition.
Partition parse_partition(const std::string& s);

}  // namespace qsym
