#pragma once

#include "huakit/alpha_perm.hpp"
#include "huakit/hua_kernel.hpp"
#include "huakit/metric.hpp"
#include "huakit/partitions.hpp"
#include "huakit/types.hpp"

// Plain single-threaded implementations of the parallel kernels. They follow
// the textbook loops with no blocking, so tests can compare the production
// kernels against an independently structured computation, and the benchmark
// target measures the speedup.
namespace huakit::ref {

Complex alpha_permanent(const CMatrix& A, Complex alpha, int cap = kPermanentCap);
Complex immanant(const CMatrix& A, const Partition& lambda, int cap = kPermanentCap);
HuaBellmanMatrix build_hua_bellman(const std::vector<Contraction>& family, double alpha,
                                   Field field);
SearchResult counterexample_search(const SearchParams& params);
double triangle_suite(std::uint64_t seed, int count, TriangleMetric which, int n,
                      double p = 1.0);

}  // namespace huakit::ref
