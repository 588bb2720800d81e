#include "huakit/matrix_core.hpp"

#include <cmath>
#include <sstream>

namespace huakit {

void require_finite(const CMatrix& M, const char* what) {
  if (!M.allFinite()) {
    throw validation_error(std::string(what) + ": non-finite entry");
  }
}

void require_square(const CMatrix& M, const char* what) {
  if (M.rows() != M.cols()) {
    std::ostringstream os;
    os << what << ": matrix must be square, got " << M.rows() << "x" << M.cols();
    throw validation_error(os.str());
  }
}

bool is_exactly_real(const CMatrix& M) {
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      if (M(i, j).imag() != 0.0) return false;
  return true;
}

double spectral_norm(const CMatrix& M) {
  require_finite(M, "spectral_norm");
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(M);
  return svd.singularValues()(0);
}

RVector singular_values(const CMatrix& M) {
  require_finite(M, "singular_values");
  Eigen::JacobiSVD<CMatrix> svd(M);
  return svd.singularValues();
}

Contraction as_contraction(const CMatrix& M, double margin) {
  require_finite(M, "as_contraction");
  require_square(M, "as_contraction");
  if (M.rows() < 1) throw validation_error("as_contraction: empty matrix");
  if (!(margin > 0.0) || margin >= 1.0) {
    throw validation_error("as_contraction: margin must lie in (0, 1)");
  }
  const double norm = spectral_norm(M);
  if (norm > 1.0 - margin) {
    std::ostringstream os;
    os << "as_contraction: not a strict contraction, norm " << norm << " > 1 - margin "
       << margin;
    throw validation_error(os.str());
  }
  return Contraction(M, norm, margin);
}

HermitianMatrix as_hermitian(const CMatrix& M) {
  require_finite(M, "as_hermitian");
  require_square(M, "as_hermitian");
  if (M.rows() < 1) throw validation_error("as_hermitian: empty matrix");
  const double scale = 1.0 + M.cwiseAbs().maxCoeff();
  const double defect = (M - M.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermitianDefectTol * scale) {
    std::ostringstream os;
    os << "as_hermitian: Hermiticity defect " << defect << " exceeds " << kHermitianDefectTol
       << " * " << scale;
    throw validation_error(os.str());
  }
  return HermitianMatrix(M, defect);
}

CMatrix symmetrize(const CMatrix& X) {
  require_finite(X, "symmetrize");
  require_square(X, "symmetrize");
  return 0.5 * (X + X.transpose());
}

HermitianMatrix matrix_abs(const CMatrix& X) {
  require_finite(X, "matrix_abs");
  require_square(X, "matrix_abs");
  Eigen::JacobiSVD<CMatrix> svd(X, Eigen::ComputeFullV);
  const CMatrix V = svd.matrixV();
  CMatrix W = V * svd.singularValues().asDiagonal() * V.adjoint();
  W = 0.5 * (W + W.adjoint());  // roundoff cleanup; exact Hermitian by construction
  return as_hermitian(W);
}

HermitianEigen hermitian_eigen(const HermitianMatrix& H) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H.matrix());
  if (es.info() != Eigen::Success) {
    throw numerical_error("hermitian_eigen: eigensolver failed to converge");
  }
  const Eigen::Index n = H.dim();
  HermitianEigen out;
  out.values = es.eigenvalues().reverse();
  out.vectors = es.eigenvectors().rowwise().reverse();
  const CMatrix recon =
      out.vectors * out.values.cast<Complex>().asDiagonal() * out.vectors.adjoint();
  const double scale = 1.0 + H.matrix().cwiseAbs().maxCoeff();
  const double resid = (recon - H.matrix()).cwiseAbs().maxCoeff();
  if (resid > kEigenResidualTol * scale) {
    throw numerical_error("hermitian_eigen: reconstruction residual too large");
  }
  (void)n;
  return out;
}

namespace {

// Stable closed form for the 2x2 case; keeps conjugate pairs exactly conjugate,
// which makes real-input log-dets exactly real.
CVector eigenvalues_2x2(const CMatrix& M) {
  const Complex tr = M(0, 0) + M(1, 1);
  const Complex det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  CVector v(2);
  if (tr.imag() == 0.0 && det.imag() == 0.0) {
    // real characteristic polynomial: the roots are exactly real or an exact
    // conjugate pair, so their logs sum to a real number with no imaginary dust
    const double t = tr.real();
    const double d = det.real();
    const double disc = t * t - 4.0 * d;
    if (disc < 0.0) {
      const Complex root(0.5 * t, 0.5 * std::sqrt(-disc));
      v << root, std::conj(root);
    } else {
      const double q = 0.5 * (t + std::copysign(std::sqrt(disc), t));
      v << Complex(q, 0.0), Complex(q != 0.0 ? d / q : 0.0, 0.0);
    }
    return v;
  }
  Complex disc = std::sqrt(tr * tr - 4.0 * det);
  if (std::real(std::conj(tr) * disc) < 0.0) disc = -disc;
  const Complex l1 = 0.5 * (tr + disc);
  const Complex l2 = (l1 != Complex(0.0, 0.0)) ? det / l1 : 0.5 * (tr - disc);
  v << l1, l2;
  return v;
}

}  // namespace

CVector complex_eigenvalues(const CMatrix& M) {
  require_finite(M, "complex_eigenvalues");
  require_square(M, "complex_eigenvalues");
  const Eigen::Index n = M.rows();
  if (n == 0) return CVector();
  if (n == 1) {
    CVector v(1);
    v << M(0, 0);
    return v;
  }
  if (n == 2) return eigenvalues_2x2(M);
  Eigen::ComplexEigenSolver<CMatrix> es(M, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw numerical_error("complex_eigenvalues: eigensolver failed to converge");
  }
  return es.eigenvalues();
}

Complex log_det_right_halfplane(const CMatrix& M) {
  require_square(M, "log_det_right_halfplane");
  if (M.rows() == 0) return Complex(0.0, 0.0);
  const CVector lam = complex_eigenvalues(M);
  Complex sum(0.0, 0.0);
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (!(lam(i).real() > 0.0)) {
      std::ostringstream os;
      os << "log_det_right_halfplane: eigenvalue " << lam(i)
         << " has non-positive real part, principal branch not defined here";
      throw numerical_error(os.str());
    }
    sum += std::log(lam(i));
  }
  return sum;
}

double logdet_hpd(const HermitianMatrix& X) {
  const HermitianEigen ee = hermitian_eigen(X);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < ee.values.size(); ++i) {
    if (!(ee.values(i) > 0.0)) {
      throw validation_error("logdet_hpd: matrix is not positive definite");
    }
    sum += std::log(ee.values(i));
  }
  return sum;
}

namespace {

CMatrix hermitian_power(const HermitianMatrix& H, double expo, bool require_pd) {
  const HermitianEigen ee = hermitian_eigen(H);
  RVector d = ee.values;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (require_pd ? !(d(i) > 0.0) : d(i) < 0.0) {
      throw validation_error("hermitian power: eigenvalue outside required cone");
    }
    d(i) = std::pow(d(i), expo);
  }
  CMatrix W = ee.vectors * d.cast<Complex>().asDiagonal() * ee.vectors.adjoint();
  return 0.5 * (W + W.adjoint());
}

}  // namespace

CMatrix hermitian_sqrt(const HermitianMatrix& H) {
  // tolerate tiny negative roundoff by clamping at zero
  const HermitianEigen ee = hermitian_eigen(H);
  RVector d = ee.values;
  const double floor = -kEigenResidualTol * (1.0 + std::abs(d(0)));
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i) < floor) {
      throw validation_error("hermitian_sqrt: matrix is not positive semidefinite");
    }
    d(i) = std::sqrt(std::max(d(i), 0.0));
  }
  CMatrix W = ee.vectors * d.cast<Complex>().asDiagonal() * ee.vectors.adjoint();
  return 0.5 * (W + W.adjoint());
}

CMatrix hermitian_inv_sqrt(const HermitianMatrix& H) { return hermitian_power(H, -0.5, true); }

}  // namespace huakit
