#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "huakit/matrix_core.hpp"
#include "huakit/metric.hpp"
#include "huakit/rng.hpp"

using namespace huakit;

TEST_CASE("spectral norm matches the largest singular value") {
  Stream s = substream(101, 0);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 4;
    const CMatrix M = sample_gaussian(s, n);
    const RVector sv = singular_values(M);
    CHECK(sv.size() == n);
    for (int i = 0; i + 1 < n; ++i) CHECK(sv(i) >= sv(i + 1));  // descending
    CHECK(spectral_norm(M) == doctest::Approx(sv(0)).epsilon(1e-12));
  }
}

TEST_CASE("spectral norm of a diagonal matrix is the largest |entry|") {
  CMatrix D = CMatrix::Zero(3, 3);
  D(0, 0) = Complex(0.3, 0.0);
  D(1, 1) = Complex(0.0, -0.7);
  D(2, 2) = Complex(0.1, 0.1);
  CHECK(spectral_norm(D) == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("as_contraction accepts strict contractions and rejects the rest") {
  CMatrix ok = CMatrix::Identity(2, 2) * Complex(0.5, 0.0);
  const Contraction c = as_contraction(ok);
  CHECK(c.norm() == doctest::Approx(0.5));
  CHECK(c.dim() == 2);

  CMatrix boundary = CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(as_contraction(boundary), validation_error);

  CMatrix slightly_in = CMatrix::Identity(2, 2) * Complex(1.0 - 1e-12, 0.0);
  CHECK_THROWS_AS(as_contraction(slightly_in), validation_error);  // inside margin

  CMatrix nan = ok;
  nan(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(as_contraction(nan), validation_error);

  CMatrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(as_contraction(rect), validation_error);
}

TEST_CASE("as_hermitian validates the defect") {
  CMatrix H(2, 2);
  H << Complex(2.0, 0.0), Complex(0.5, 0.25), Complex(0.5, -0.25), Complex(1.0, 0.0);
  CHECK(as_hermitian(H).defect() == 0.0);

  CMatrix bad = H;
  bad(0, 1) += Complex(1e-6, 0.0);
  CHECK_THROWS_AS(as_hermitian(bad), validation_error);
}

TEST_CASE("symmetrize uses the plain transpose") {
  CMatrix X(2, 2);
  X << Complex(0.0, 1.0), Complex(2.0, 0.0), Complex(4.0, 0.0), Complex(0.0, 0.0);
  const CMatrix S = symmetrize(X);
  CHECK(S(0, 1) == Complex(3.0, 0.0));
  CHECK(S(1, 0) == Complex(3.0, 0.0));
  CHECK(S(0, 0) == Complex(0.0, 1.0));  // conjugation would have zeroed this
}

TEST_CASE("matrix_abs eigenvalues equal the singular values") {
  Stream s = substream(102, 0);
  for (int t = 0; t < 10; ++t) {
    const CMatrix M = sample_gaussian(s, 3);
    const HermitianEigen e = hermitian_eigen(matrix_abs(M));
    const RVector sv = singular_values(M);
    for (int i = 0; i < 3; ++i) {
      CHECK(e.values(i) == doctest::Approx(sv(i)).epsilon(1e-10));
    }
  }
}

TEST_CASE("hermitian_eigen reconstructs and orders descending") {
  Stream s = substream(103, 0);
  const HermitianMatrix H = sample_hpd(s, 4);
  const HermitianEigen e = hermitian_eigen(H);
  CHECK(e.values(0) >= e.values(3));
  const CMatrix R = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
  CHECK((R - H.matrix()).cwiseAbs().maxCoeff() < 1e-10 * (1.0 + e.values(0)));
  const CMatrix G = e.vectors.adjoint() * e.vectors;
  CHECK((G - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("log_det_right_halfplane exponentiates back to the determinant") {
  Stream s = substream(104, 0);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 2;
    const Contraction A = sample_contraction(s, n);
    const Contraction B = sample_contraction(s, n);
    const CMatrix M = CMatrix::Identity(n, n) - A.matrix().adjoint() * B.matrix();
    const Complex ld = log_det_right_halfplane(M);
    const Complex det = M.determinant();
    CHECK(std::abs(std::exp(ld) - det) < 1e-12 * (1.0 + std::abs(det)));
  }
}

TEST_CASE("log_det_right_halfplane rejects left-halfplane spectra") {
  CMatrix M = -CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(log_det_right_halfplane(M), numerical_error);
}

TEST_CASE("real contractions give exactly real kernel log-dets") {
  // 2x2 closed-form eigenvalue path: no imaginary dust on real input
  Stream s = substream(105, 0);
  for (int t = 0; t < 50; ++t) {
    const Contraction A = sample_real_contraction(s, 2);
    const Contraction B = sample_real_contraction(s, 2);
    const CMatrix M = CMatrix::Identity(2, 2) - A.matrix().transpose() * B.matrix();
    CHECK(log_det_right_halfplane(M).imag() == 0.0);
  }
}

TEST_CASE("logdet_hpd agrees with the eigenvalue sum and rejects indefinite input") {
  Stream s = substream(106, 0);
  const HermitianMatrix H = sample_hpd(s, 3);
  const HermitianEigen e = hermitian_eigen(H);
  double expected = 0.0;
  for (int i = 0; i < 3; ++i) expected += std::log(e.values(i));
  CHECK(logdet_hpd(H) == doctest::Approx(expected).epsilon(1e-12));

  CMatrix I = CMatrix::Identity(2, 2);
  CHECK(std::abs(logdet_hpd(as_hermitian(I))) < 1e-14);
  CHECK_THROWS_AS(logdet_hpd(as_hermitian(-I)), validation_error);
}

TEST_CASE("hermitian square roots invert each other") {
  Stream s = substream(107, 0);
  const HermitianMatrix H = sample_hpd(s, 3);
  const CMatrix R = hermitian_sqrt(H);
  const CMatrix Ri = hermitian_inv_sqrt(H);
  CHECK((R * R - H.matrix()).cwiseAbs().maxCoeff() < 1e-10 * (1.0 + spectral_norm(H.matrix())));
  CHECK((R * Ri - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("is_exactly_real") {
  CMatrix M = CMatrix::Identity(2, 2);
  CHECK(is_exactly_real(M));
  M(1, 0) = Complex(0.0, 1e-300);
  CHECK_FALSE(is_exactly_real(M));
}

TEST_CASE("substreams are order-free and distinct") {
  Stream a = substream(5, 0);
  Stream b = substream(5, 1);
  Stream a2 = substream(5, 0);
  const std::uint64_t x = a.next_u64();
  CHECK(x == a2.next_u64());
  CHECK(x != b.next_u64());
}

TEST_CASE("uniform_int covers its range without bias artifacts at the edges") {
  Stream s = substream(108, 0);
  bool saw_lo = false, saw_hi = false;
  for (int t = 0; t < 2000; ++t) {
    const long long v = s.uniform_int(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    saw_lo = saw_lo || v == -3;
    saw_hi = saw_hi || v == 3;
  }
  CHECK(saw_lo);
  CHECK(saw_hi);
}
