#include "huakit/metric.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

#include "huakit/parallel.hpp"

namespace huakit {

DistanceValue make_distance(double squared) {
  if (!std::isfinite(squared)) throw numerical_error("distance: non-finite squared value");
  if (squared < -kDistanceClamp) {
    std::ostringstream os;
    os << "distance: squared value " << squared << " below -" << kDistanceClamp
       << ", invariant violated";
    throw numerical_error(os.str());
  }
  DistanceValue d;
  d.squared = std::max(squared, 0.0);
  d.value = std::sqrt(d.squared);
  return d;
}

DistanceValue hua_distance_sq(const Contraction& A, const Contraction& B) {
  if (A.dim() != B.dim()) throw validation_error("hua_distance_sq: dimension mismatch");
  const Eigen::Index n = A.dim();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix& a = A.matrix();
  const CMatrix& b = B.matrix();
  const double t_ab = log_det_right_halfplane(I - a.adjoint() * b).real();
  const double t_aa = log_det_right_halfplane(I - a.adjoint() * a).real();
  const double t_bb = log_det_right_halfplane(I - b.adjoint() * b).real();
  return make_distance(t_ab - 0.5 * t_aa - 0.5 * t_bb);
}

DistanceValue s_divergence(const HermitianMatrix& X, const HermitianMatrix& Y) {
  if (X.dim() != Y.dim()) throw validation_error("s_divergence: dimension mismatch");
  const HermitianMatrix mid = as_hermitian(0.5 * (X.matrix() + Y.matrix()));
  const double t = logdet_hpd(mid) - 0.5 * logdet_hpd(X) - 0.5 * logdet_hpd(Y);
  return make_distance(t);
}

DistanceValue delta_p_sq(const CMatrix& X, const CMatrix& Y, double p) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols()) {
    throw validation_error("delta_p_sq: shape mismatch");
  }
  if (!(p >= 0.0) || p > 2.0) throw validation_error("delta_p_sq: p must lie in [0, 2]");
  require_finite(X, "delta_p_sq");
  require_finite(Y, "delta_p_sq");
  const RVector sv = singular_values(X - Y);
  double sum = 0.0;
  if (p == 0.0) {
    const double cut = sv.size() > 0 ? kRankTol * sv(0) : 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > cut && sv(i) > 0.0) sum += std::numbers::ln2;
    }
  } else {
    for (Eigen::Index i = 0; i < sv.size(); ++i) sum += std::log1p(std::pow(sv(i), p));
  }
  return make_distance(sum);
}

double f_log_power(double t, double p) {
  if (t < 0.0) throw validation_error("f_log_power: t must be >= 0");
  if (!(p >= 0.0) || p > 2.0) throw validation_error("f_log_power: p must lie in [0, 2]");
  if (p == 0.0) return t > 0.0 ? std::sqrt(std::numbers::ln2) : 0.0;
  return std::sqrt(std::log1p(std::pow(t, p)));
}

double concavity_profile(double p, const std::vector<double>& grid) {
  if (!(p >= 0.0) || p > 2.0) throw validation_error("concavity_profile: p out of [0, 2]");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw validation_error("concavity_profile: grid must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw validation_error("concavity_profile: grid must be strictly increasing");
    }
  }
  if (grid.size() < 3) return -std::numeric_limits<double>::infinity();  // no data
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double t0 = grid[i - 1], t1 = grid[i], t2 = grid[i + 1];
    const double f0 = f_log_power(t0, p), f1 = f_log_power(t1, p), f2 = f_log_power(t2, p);
    const double dd =
        2.0 * ((f2 - f1) / (t2 - t1) - (f1 - f0) / (t1 - t0)) / (t2 - t0);
    worst = std::max(worst, dd);
  }
  return worst;
}

namespace {

CMatrix re_part(const CMatrix& X) { return 0.5 * (X + X.adjoint()); }
CMatrix im_part(const CMatrix& X) { return (X - X.adjoint()) / Complex(0.0, 2.0); }

double min_hermitian_eig(const CMatrix& H) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw numerical_error("eigensolver failed");
  return es.eigenvalues()(0);
}

}  // namespace

MobiusPair mobius_transform(const Contraction& A, const Contraction& B) {
  if (A.dim() != B.dim()) throw validation_error("mobius_transform: dimension mismatch");
  const Eigen::Index n = A.dim();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix& a = A.matrix();
  const CMatrix& b = B.matrix();

  MobiusPair out;
  out.X = (I - a).inverse() * (I + a);
  out.Y = (I - b).inverse() * (I + b);

  const CMatrix lhs = I - a.adjoint() * b;
  const CMatrix rhs = 2.0 * (I + out.X.adjoint()).inverse() * (out.X.adjoint() + out.Y) *
                      (I + out.Y).inverse();
  const double scale1 = 1.0 + lhs.cwiseAbs().maxCoeff();
  out.residual_identity = (lhs - rhs).cwiseAbs().maxCoeff() / scale1;

  const CMatrix rex = re_part(out.X);
  const CMatrix closed =
      0.25 * (I + out.X.adjoint()) * (I - a.adjoint() * a) * (I + out.X);
  const double scale2 = 1.0 + rex.cwiseAbs().maxCoeff();
  out.residual_real_part = (rex - closed).cwiseAbs().maxCoeff() / scale2;

  out.min_re_eig_x = min_hermitian_eig(rex);
  out.min_re_eig_y = min_hermitian_eig(re_part(out.Y));
  return out;
}

DistanceValue delta_halfplane_sq(const CMatrix& X, const CMatrix& Y) {
  require_square(X, "delta_halfplane_sq");
  if (X.rows() != Y.rows() || X.cols() != Y.cols()) {
    throw validation_error("delta_halfplane_sq: shape mismatch");
  }
  require_finite(X, "delta_halfplane_sq");
  require_finite(Y, "delta_halfplane_sq");
  if (!(min_hermitian_eig(re_part(X)) > 0.0) || !(min_hermitian_eig(re_part(Y)) > 0.0)) {
    throw validation_error("delta_halfplane_sq: real parts must be positive definite");
  }
  const double num = log_det_right_halfplane(X.adjoint() + Y).real();
  const double dx = logdet_hpd(as_hermitian(X.adjoint() + X));
  const double dy = logdet_hpd(as_hermitian(Y.adjoint() + Y));
  return make_distance(num - 0.5 * dx - 0.5 * dy);
}

DecompositionResult decomposition_check(const CMatrix& X, const CMatrix& Y) {
  require_square(X, "decomposition_check");
  if (X.rows() != Y.rows() || X.cols() != Y.cols()) {
    throw validation_error("decomposition_check: shape mismatch");
  }
  const Eigen::Index n = X.rows();

  const CMatrix rx = re_part(X);
  const CMatrix ry = re_part(Y);
  const CMatrix T = hermitian_inv_sqrt(as_hermitian(rx + ry));  // T^* (Re X + Re Y) T = I

  const CMatrix Mx = 0.5 * (T.adjoint() * rx * T + (T.adjoint() * rx * T).adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(Mx);
  if (es.info() != Eigen::Success) {
    throw numerical_error("decomposition_check: eigensolver failed");
  }
  const CMatrix U = es.eigenvectors();
  const RVector dx = es.eigenvalues();

  const CMatrix My = U.adjoint() * (T.adjoint() * ry * T) * U;
  RVector dy(n);
  for (Eigen::Index i = 0; i < n; ++i) dy(i) = 1.0 - dx(i);
  double diag_resid = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex expect = (i == j) ? Complex(dy(i), 0.0) : Complex(0.0, 0.0);
      diag_resid = std::max(diag_resid, std::abs(My(i, j) - expect));
    }
  }
  if (diag_resid > 1e-8) {
    throw numerical_error("decomposition_check: simultaneous diagonalization failed");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(dx(i) > 0.0) || !(dy(i) > 0.0)) {
      throw numerical_error("decomposition_check: commuting parts not positive definite");
    }
  }

  const CMatrix TU = T * U;
  const CMatrix Sx = 0.5 * (TU.adjoint() * im_part(X) * TU +
                            (TU.adjoint() * im_part(X) * TU).adjoint());
  const CMatrix Sy = 0.5 * (TU.adjoint() * im_part(Y) * TU +
                            (TU.adjoint() * im_part(Y) * TU).adjoint());

  const CMatrix Dx = dx.cast<Complex>().asDiagonal();
  const CMatrix Dy = dy.cast<Complex>().asDiagonal();
  const double sdiv = s_divergence(as_hermitian(Dx), as_hermitian(Dy)).squared;
  const double d2 = delta_p_sq(Sx, Sy, 2.0).squared;

  DecompositionResult r;
  r.lhs = delta_halfplane_sq(X, Y).squared;
  r.rhs = sdiv + 0.5 * d2;
  r.residual = std::abs(r.lhs - r.rhs) / (1.0 + std::max(std::abs(r.lhs), std::abs(r.rhs)));
  r.diag_residual = diag_resid;
  return r;
}

bool weak_majorization(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw validation_error("weak_majorization: length mismatch");
  for (double v : x) {
    if (!(v >= 0.0)) throw validation_error("weak_majorization: entries must be >= 0");
  }
  for (double v : y) {
    if (!(v >= 0.0)) throw validation_error("weak_majorization: entries must be >= 0");
  }
  std::vector<double> xs = x, ys = y;
  std::sort(xs.rbegin(), xs.rend());
  std::sort(ys.rbegin(), ys.rend());
  double px = 0.0, py = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    px += xs[i];
    py += ys[i];
    if (px > py + 1e-12) return false;
  }
  return true;
}

bool uchiyama_check(const CMatrix& A, const CMatrix& B, double p) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw validation_error("uchiyama_check: shape mismatch");
  }
  const RVector sa = singular_values(A);
  const RVector sb = singular_values(B);
  const RVector sc = singular_values(A + B);
  std::vector<double> lhs(sc.size()), rhs(sc.size());
  for (Eigen::Index i = 0; i < sc.size(); ++i) {
    lhs[i] = f_log_power(sc(i), p);
    rhs[i] = f_log_power(sa(i), p) + f_log_power(sb(i), p);
  }
  return weak_majorization(lhs, rhs);
}

CMatrix sample_gaussian(Stream& s, int n) {
  CMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = s.cnormal();
  return G;
}

RMatrix sample_gaussian_real(Stream& s, int n) {
  RMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = s.normal();
  return G;
}

namespace {

Contraction contraction_from(const CMatrix& G, Stream& s) {
  const double sc = s.uniform(1.05, 4.0);
  const double norm = spectral_norm(G);
  if (norm == 0.0) throw numerical_error("sample_contraction: degenerate draw");
  return as_contraction(G / (sc * norm));
}

}  // namespace

Contraction sample_contraction(Stream& s, int n) {
  return contraction_from(sample_gaussian(s, n), s);
}

Contraction sample_real_contraction(Stream& s, int n) {
  return contraction_from(sample_gaussian_real(s, n).cast<Complex>(), s);
}

HermitianMatrix sample_hpd(Stream& s, int n) {
  const CMatrix G = sample_gaussian(s, n);
  const double shift = s.uniform(0.05, 1.0);
  CMatrix H = G * G.adjoint() / static_cast<double>(n) + shift * CMatrix::Identity(n, n);
  H = 0.5 * (H + H.adjoint());
  return as_hermitian(H);
}

double triangle_suite(std::uint64_t seed, int count, TriangleMetric which, int n, double p) {
  if (count < 0) throw validation_error("triangle_suite: count must be >= 0");
  if (n < 1) throw validation_error("triangle_suite: n must be >= 1");
  if (count == 0) return -std::numeric_limits<double>::infinity();

  double worst = -std::numeric_limits<double>::infinity();
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers()) reduction(max : worst)
  for (int t = 0; t < count; ++t) {
    try {
      Stream stream = substream(seed, static_cast<std::uint64_t>(t));
      double dab = 0.0, dac = 0.0, dcb = 0.0;
      switch (which) {
        case TriangleMetric::hua: {
          const Contraction A = sample_contraction(stream, n);
          const Contraction B = sample_contraction(stream, n);
          const Contraction C = sample_contraction(stream, n);
          dab = hua_distance_sq(A, B).value;
          dac = hua_distance_sq(A, C).value;
          dcb = hua_distance_sq(C, B).value;
          break;
        }
        case TriangleMetric::sdiv: {
          const HermitianMatrix X = sample_hpd(stream, n);
          const HermitianMatrix Y = sample_hpd(stream, n);
          const HermitianMatrix Z = sample_hpd(stream, n);
          dab = s_divergence(X, Y).value;
          dac = s_divergence(X, Z).value;
          dcb = s_divergence(Z, Y).value;
          break;
        }
        case TriangleMetric::deltap: {
          const CMatrix X = sample_gaussian(stream, n);
          const CMatrix Y = sample_gaussian(stream, n);
          const CMatrix Z = sample_gaussian(stream, n);
          dab = delta_p_sq(X, Y, p).value;
          dac = delta_p_sq(X, Z, p).value;
          dcb = delta_p_sq(Z, Y, p).value;
          break;
        }
      }
      worst = std::max(worst, dab - dac - dcb);
    } catch (...) {
#pragma omp critical(huakit_triangle_fail)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return worst;
}

}  // namespace huakit
