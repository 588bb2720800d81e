#pragma once

#include "huakit/types.hpp"

namespace huakit {

inline constexpr double kContractionMargin = 1e-9;
inline constexpr double kHermitianDefectTol = 1e-12;
inline constexpr double kEigenResidualTol = 1e-10;

void require_finite(const CMatrix& M, const char* what);
void require_square(const CMatrix& M, const char* what);
bool is_exactly_real(const CMatrix& M);

/// Largest singular value.
double spectral_norm(const CMatrix& M);

/// Singular values, descending.
RVector singular_values(const CMatrix& M);

/// Strict contraction: validated ||A|| <= 1 - margin at construction.
class Contraction {
 public:
  const CMatrix& matrix() const { return m_; }
  double norm() const { return norm_; }
  double margin() const { return margin_; }
  Eigen::Index dim() const { return m_.rows(); }

  friend Contraction as_contraction(const CMatrix& M, double margin);

 private:
  Contraction(CMatrix m, double norm, double margin)
      : m_(std::move(m)), norm_(norm), margin_(margin) {}

  CMatrix m_;
  double norm_;
  double margin_;
};

Contraction as_contraction(const CMatrix& M, double margin = kContractionMargin);

/// Square matrix with validated Hermiticity defect max|M - M*| <= 1e-12 * (1 + max|entry|).
class HermitianMatrix {
 public:
  const CMatrix& matrix() const { return m_; }
  double defect() const { return defect_; }
  Eigen::Index dim() const { return m_.rows(); }

  friend HermitianMatrix as_hermitian(const CMatrix& M);

 private:
  HermitianMatrix(CMatrix m, double defect) : m_(std::move(m)), defect_(defect) {}

  CMatrix m_;
  double defect_;
};

HermitianMatrix as_hermitian(const CMatrix& M);

/// (X + X^T)/2 with the plain (unconjugated) transpose.
CMatrix symmetrize(const CMatrix& X);

/// |X| = (X*X)^{1/2}; eigenvalues equal the singular values of X.
HermitianMatrix matrix_abs(const CMatrix& X);

struct HermitianEigen {
  RVector values;   // descending
  CMatrix vectors;  // unitary, columns matching values
};

/// Full Hermitian eigendecomposition with a reconstruction-residual check.
HermitianEigen hermitian_eigen(const HermitianMatrix& H);

/// Eigenvalues of a general square complex matrix (unordered).
CVector complex_eigenvalues(const CMatrix& M);

/// sum_j Log lambda_j(M), principal branch per eigenvalue. Every eigenvalue
/// must have strictly positive real part; exp of the result recovers det(M).
Complex log_det_right_halfplane(const CMatrix& M);

/// log det of a Hermitian positive definite matrix (validation error otherwise).
double logdet_hpd(const HermitianMatrix& X);

/// Principal square root / inverse square root of a Hermitian PSD (resp. PD) matrix.
CMatrix hermitian_sqrt(const HermitianMatrix& H);
CMatrix hermitian_inv_sqrt(const HermitianMatrix& H);

}  // namespace huakit
