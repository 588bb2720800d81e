#pragma once

#include <cstdint>
#include <vector>

#include "huakit/matrix_core.hpp"
#include "huakit/rng.hpp"
#include "huakit/types.hpp"

namespace huakit {

inline constexpr double kDistanceClamp = 1e-12;

/// Squared distance plus its square root. Squared values in [-1e-12, 0) are
/// roundoff and clamp to 0; anything lower is an invariant violation and throws.
struct DistanceValue {
  double squared = 0.0;
  double value = 0.0;
};

DistanceValue make_distance(double squared);

/// d^2(A,B) = log |det(I - A^*B)| - (1/2) log det(I - A^*A) - (1/2) log det(I - B^*B),
/// all three terms through the same principal log-det path so d(A,A) is exactly 0.
DistanceValue hua_distance_sq(const Contraction& A, const Contraction& B);

/// S-divergence on Hermitian PD matrices:
/// log det((X+Y)/2) - (1/2) log det X - (1/2) log det Y.
DistanceValue s_divergence(const HermitianMatrix& X, const HermitianMatrix& Y);

inline constexpr double kRankTol = 1e-10;

/// delta_p^2(X,Y) = log det(I + |X-Y|^p) = sum_j log(1 + sigma_j^p), p in [0, 2].
/// p = 0 degenerates to rank(X-Y) * log 2 with rank cut 1e-10 * sigma_max.
DistanceValue delta_p_sq(const CMatrix& X, const CMatrix& Y, double p);

/// f(t) = sqrt(log(1 + t^p)).
double f_log_power(double t, double p);

/// Largest second divided difference (times 2) of f over the grid; <= 0 up to
/// roundoff when f is concave. Grids with fewer than 3 points carry no signal
/// and return -infinity ("no data").
double concavity_profile(double p, const std::vector<double>& grid);

/// Cayley images X = (I-A)^{-1}(I+A), Y = (I-B)^{-1}(I+B) plus residuals of
///   (i)  I - A^*B = 2 (I+X^*)^{-1} (X^* + Y) (I+Y)^{-1}
///   (ii) Re X = (1/4) (I+X^*) (I - A^*A) (I+X)
/// and the smallest eigenvalues of Re X, Re Y (positive for strict contractions).
struct MobiusPair {
  CMatrix X;
  CMatrix Y;
  double residual_identity = 0.0;  // part (i), relative
  double residual_real_part = 0.0; // part (ii), relative
  double min_re_eig_x = 0.0;
  double min_re_eig_y = 0.0;
};

MobiusPair mobius_transform(const Contraction& A, const Contraction& B);

/// Half-plane form on matrices with positive definite real part:
/// log |det(X^* + Y)| - (1/2) log det(X^* + X) - (1/2) log det(Y^* + Y).
DistanceValue delta_halfplane_sq(const CMatrix& X, const CMatrix& Y);

/// Splits delta^2(X,Y) into an S-divergence of commuting real parts plus half a
/// delta_2^2 of Hermitian imaginary parts, after congruence by Re(X+Y)^{-1/2}
/// and a simultaneous diagonalization (D_x + D_y = I is asserted).
struct DecompositionResult {
  double lhs = 0.0;       // delta^2(X, Y)
  double rhs = 0.0;       // S-divergence + 1/2 delta_2^2 pieces
  double residual = 0.0;  // |lhs - rhs| / (1 + max(|lhs|, |rhs|))
  double diag_residual = 0.0;  // max | U^* T^* Re(Y) T U - (I - D_x) |
};

DecompositionResult decomposition_check(const CMatrix& X, const CMatrix& Y);

/// Weak majorization x \prec_w y: descending partial sums of x never exceed
/// those of y by more than 1e-12. Entries must be nonnegative.
bool weak_majorization(const std::vector<double>& x, const std::vector<double>& y);

/// {f(sigma_j(A+B))} \prec_w {f(sigma_j(A)) + f(sigma_j(B))} with
/// f(t) = sqrt(log(1+t^p)), both spectra taken descending.
bool uchiyama_check(const CMatrix& A, const CMatrix& B, double p);

enum class TriangleMetric { hua, sdiv, deltap };

/// Worst d(A,B) - d(A,C) - d(C,B) over `count` sampled triples (per-triple
/// substreams; max-reduction, so the result is worker-count independent).
double triangle_suite(std::uint64_t seed, int count, TriangleMetric which, int n,
                      double p = 1.0);

// samplers (deterministic given the stream)
CMatrix sample_gaussian(Stream& s, int n);
RMatrix sample_gaussian_real(Stream& s, int n);
/// G / (s ||G||) with s uniform in [1.05, 4]: strict contraction, norm <= 1/1.05.
Contraction sample_contraction(Stream& s, int n);
Contraction sample_real_contraction(Stream& s, int n);
HermitianMatrix sample_hpd(Stream& s, int n);

}  // namespace huakit
