#pragma once

#include <cstdint>
#include <vector>

#include "huakit/types.hpp"

namespace huakit {

inline constexpr int kPartitionCap = 10;

/// Integer partition, parts non-increasing and >= 1. The empty partition is n = 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool operator==(const Partition&) const = default;
};

/// Cycle type of a permutation: same invariants, number of cycles = length.
using CycleType = Partition;

/// All partitions of n in reverse-lexicographic order ([n] first, [1,...,1] last).
std::vector<Partition> partitions(int n);

long long factorial(int n);  // n <= 20

/// Number of cycles of a permutation given in one-line form over {0,...,n-1}.
int cycle_count(const std::vector<int>& perm);

CycleType cycle_type(const std::vector<int>& perm);

/// Irreducible character chi_lambda(rho) of the symmetric group,
/// Murnaghan-Nakayama recursion, exact integer result.
long long character(const Partition& lambda, const CycleType& rho);

long long hook_length_product(const Partition& lambda);

/// Dimension of the irreducible representation: n! / hook product.
long long irrep_dimension(const Partition& lambda);

/// |conjugacy class of rho| = n! / prod_k k^{m_k} m_k!.
long long conjugacy_class_size(const CycleType& rho);

/// Multi-index in N^n (components >= 0).
struct MultiIndex {
  std::vector<int> m;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> v);

  int order() const;  // |m|
  int size() const { return static_cast<int>(m.size()); }
  long long factorial_product() const;  // m! = prod m_i!
  bool operator==(const MultiIndex&) const = default;
};

}  // namespace huakit
