#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "huakit/matrix_core.hpp"
#include "huakit/types.hpp"

namespace huakit {

inline constexpr double kPdRelTol = 1e-10;
inline constexpr double kSearchTol = 1e-8;

enum class Verdict { positive_definite, positive_semidefinite, indefinite };

const char* to_string(Verdict v);

struct PDReport {
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::indefinite;
  std::uint64_t fingerprint = 0;  // FNV-1a over the entry bytes
};

/// Kernel matrix [det(I - A_i^* A_j)^{-alpha}] over a family of contractions.
struct HuaBellmanMatrix {
  CMatrix entries;
  double alpha = 0.0;
  Field field = Field::complex;
  std::vector<Contraction> source;

  Eigen::Index size() const { return entries.rows(); }
};

/// Max-entry residual of
///   I - B^*B + (A-B)^*(I - AA^*)^{-1}(A-B) = (I - B^*A)(I - A^*A)^{-1}(I - A^*B),
/// relative to 1 + max entry magnitude of either side.
double hua_identity_residual(const Contraction& A, const Contraction& B);

/// PD report for the 2n x 2n block matrix
///   [ (I-A^*A)^{-1}  (I-A^*B)^{-1} ]
///   [ (I-B^*A)^{-1}  (I-B^*B)^{-1} ]
/// with tolerance 1e-10 * trace.
PDReport hua_block_psd(const Contraction& A, const Contraction& B);

HuaBellmanMatrix build_hua_bellman(const std::vector<Contraction>& family, double alpha,
                                   Field field);

/// Eigenvalue-based verdict: min eig > tol is PD, >= -tol is PSD, else indefinite.
PDReport pd_check(const CMatrix& H, double tol);
PDReport pd_check(const HuaBellmanMatrix& H, double tol);

/// [det(I - sym(A_i^T A_j))^{-alpha}] with sym(X) = (X + X^T)/2; real input only.
/// Entrywise domination of the unsymmetrized kernel does not transfer its
/// positive definiteness, which is exactly what the replay instance shows.
RMatrix symmetrized_bellman(const std::vector<Contraction>& family, double alpha);

struct OstrowskiResult {
  double lhs = 0.0;  // det(I - A^T B)
  double rhs = 0.0;  // det(I - sym(A^T B))
  bool holds = false;
};

/// det(I - A^T B) >= det(I - (A^T B)_s) for real strict contractions.
OstrowskiResult ostrowski_check(const Contraction& A, const Contraction& B);

struct CounterexampleRecord {
  std::vector<Contraction> matrices;
  double alpha = 0.0;
  double min_eigenvalue = 0.0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trial;
};

/// The six integer 2x2 matrices whose half-scaled family makes the alpha = 1/2
/// kernel indefinite.
std::vector<RMatrix> counterexample_integer_matrices();

/// Rebuilds the six-matrix family (each scaled to norm 1/2), builds the
/// alpha = 1/2 kernel over the real field and returns its minimum eigenvalue.
CounterexampleRecord bellman_counterexample_replay();

/// Smallest eigenvalue of the kernel matrix over a family.
double family_min_eigenvalue(const std::vector<Contraction>& family, double alpha, Field field);

struct SearchParams {
  int m = 8;                  // family size
  int n = 2;                  // matrix dimension
  double alpha = 0.5;
  int entry_bound = 10;       // integer entries uniform in [-bound, bound]
  double target_norm = 0.5;   // each draw rescaled to this spectral norm
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = kSearchTol;    // record when min eigenvalue < -tol
};

struct SearchSummary {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  bool has_data = false;
  double min_lambda = 0.0;     // min over trials of the kernel's min eigenvalue
  double median_lambda = 0.0;
};

struct SearchResult {
  std::vector<CounterexampleRecord> records;  // ascending trial order
  SearchSummary summary;
};

/// Randomized search for indefinite kernel instances. Each trial draws its own
/// substream from (seed, trial), so records and summary are identical for any
/// worker count.
SearchResult counterexample_search(const SearchParams& params);

}  // namespace huakit
