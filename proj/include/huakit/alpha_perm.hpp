#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "huakit/matrix_core.hpp"
#include "huakit/partitions.hpp"
#include "huakit/types.hpp"

namespace huakit {

inline constexpr int kPermanentCap = 10;

/// per_alpha(A) = sum over permutations of alpha^{#cycles} * prod_i a_{i,sigma(i)}.
/// Exact n! enumeration, OpenMP over fixed-size rank blocks; the block partition
/// does not depend on the worker count, so results are bit-stable.
Complex alpha_permanent(const CMatrix& A, Complex alpha, int cap = kPermanentCap);

/// Immanant d_lambda(A) = sum over permutations of chi_lambda(sigma) * prod a_{i,sigma(i)}.
Complex immanant(const CMatrix& A, const Partition& lambda, int cap = kPermanentCap);

/// c_lambda(alpha) = (1/n!) sum_sigma alpha^{#cycles} chi_lambda(sigma),
/// computed over cycle types weighted by conjugacy class sizes.
Complex immanant_coefficient(const Partition& lambda, Complex alpha);

/// sum over partitions of c_lambda(alpha) * d_lambda(A); equals per_alpha(A).
Complex per_via_immanants(const CMatrix& A, Complex alpha, int cap = kPermanentCap);

/// Block expansion A[m]: entry (i,j) of A becomes an m_i x m_j constant block.
/// Components with m_i = 0 are deleted; m = 0 gives the 0x0 matrix.
CMatrix block_expand(const CMatrix& A, const MultiIndex& m, int cap = kPermanentCap);

/// Exact per_alpha(A[m]) without expanding: permutations of the item multiset are
/// grouped by the closed type walk of the cycle through the first item; ordered
/// item choices contribute falling factorials and the remainder recurses. Memoized
/// over residual multi-indices, so grading a whole series reuses one instance.
class BlockPermanent {
 public:
  BlockPermanent(CMatrix A, Complex alpha);

  Complex value(const MultiIndex& m);

 private:
  Complex compute(std::vector<int>& m);

  CMatrix A_;
  Complex alpha_;
  std::unordered_map<std::uint64_t, Complex> memo_;
};

/// Builds the 0/1 selection matrix Q_m, forms Q_m^* (A^*B (x) 11^T) Q_m and returns
/// the maximum absolute deviation from block_expand(A^*B, m).
double selection_factorization_check(const Contraction& A, const Contraction& B,
                                     const MultiIndex& m);

/// sum_{|m| <= order} x^m / m! * per_alpha(A[m]), multi-indices in graded order.
/// Converges to det(I - XA)^{-alpha} for ||XA|| < 1 (validated).
Complex macmahon_partial_sum(const CMatrix& A, const CVector& x, Complex alpha, int order);

/// Admissible exponent set for positive definiteness:
///   real:    {-(m+1)} U {(m+1)/2} U {0} U (n-1, inf)
///   complex: {+-(m+1)} U {0} U (n-1, inf)
/// with m ranging over {0, 1, 2, ...}.
bool exponent_admissible(double alpha, int n, Field field);

struct ExponentSet {
  Field field;
  int n;

  bool contains(double alpha) const { return exponent_admissible(alpha, n, field); }
};

/// Rank k of the lexicographically k-th permutation of {0,...,n-1}.
std::vector<int> lexicographic_permutation(std::uint64_t rank, int n);

}  // namespace huakit
