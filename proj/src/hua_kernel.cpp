#include "huakit/hua_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <sstream>

#include "huakit/parallel.hpp"
#include "huakit/rng.hpp"

namespace huakit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::positive_definite: return "positive_definite";
    case Verdict::positive_semidefinite: return "positive_semidefinite";
    case Verdict::indefinite: return "indefinite";
  }
  return "indefinite";
}

namespace {

std::uint64_t fnv1a_matrix(const CMatrix& M) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint64_t bits) {
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffULL;
      h *= 1099511628211ULL;
    }
  };
  feed(static_cast<std::uint64_t>(M.rows()));
  feed(static_cast<std::uint64_t>(M.cols()));
  for (Eigen::Index j = 0; j < M.cols(); ++j) {
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      feed(std::bit_cast<std::uint64_t>(M(i, j).real()));
      feed(std::bit_cast<std::uint64_t>(M(i, j).imag()));
    }
  }
  return h;
}

void check_same_dim(const Contraction& A, const Contraction& B, const char* what) {
  if (A.dim() != B.dim()) {
    throw validation_error(std::string(what) + ": contractions must share a dimension");
  }
}

Complex hua_entry(const CMatrix& Ai, const CMatrix& Aj, double alpha) {
  const Eigen::Index n = Ai.rows();
  const CMatrix M = CMatrix::Identity(n, n) - Ai.adjoint() * Aj;
  return std::exp(-alpha * log_det_right_halfplane(M));
}

}  // namespace

double hua_identity_residual(const Contraction& A, const Contraction& B) {
  check_same_dim(A, B, "hua_identity_residual");
  const Eigen::Index n = A.dim();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix& a = A.matrix();
  const CMatrix& b = B.matrix();
  const CMatrix lhs = I - b.adjoint() * b +
                      (a - b).adjoint() * (I - a * a.adjoint()).inverse() * (a - b);
  const CMatrix rhs =
      (I - b.adjoint() * a) * (I - a.adjoint() * a).inverse() * (I - a.adjoint() * b);
  const double scale =
      1.0 + std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
  return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

PDReport hua_block_psd(const Contraction& A, const Contraction& B) {
  check_same_dim(A, B, "hua_block_psd");
  const Eigen::Index n = A.dim();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix& a = A.matrix();
  const CMatrix& b = B.matrix();
  CMatrix block(2 * n, 2 * n);
  block.topLeftCorner(n, n) = (I - a.adjoint() * a).inverse();
  block.topRightCorner(n, n) = (I - a.adjoint() * b).inverse();
  block.bottomLeftCorner(n, n) = (I - b.adjoint() * a).inverse();
  block.bottomRightCorner(n, n) = (I - b.adjoint() * b).inverse();
  const double tol = kPdRelTol * std::abs(block.trace().real());
  return pd_check(block, tol);
}

HuaBellmanMatrix build_hua_bellman(const std::vector<Contraction>& family, double alpha,
                                   Field field) {
  if (family.empty()) throw validation_error("build_hua_bellman: empty family");
  const Eigen::Index n = family.front().dim();
  for (const Contraction& c : family) {
    if (c.dim() != n) {
      throw validation_error("build_hua_bellman: family members must share a dimension");
    }
    if (field == Field::real && !is_exactly_real(c.matrix())) {
      throw validation_error("build_hua_bellman: real field requires real matrices");
    }
  }
  if (!std::isfinite(alpha)) throw validation_error("build_hua_bellman: alpha not finite");

  const int m = static_cast<int>(family.size());
  HuaBellmanMatrix H;
  H.alpha = alpha;
  H.field = field;
  H.source = family;
  H.entries.resize(m, m);

  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(workers())
  for (int idx = 0; idx < m * m; ++idx) {
    try {
      const int i = idx / m;
      const int j = idx % m;
      Complex e = hua_entry(family[i].matrix(), family[j].matrix(), alpha);
      if (field == Field::real) {
        // det(I - A_i^T A_j) is real and positive here; drop roundoff imaginaries
        if (std::abs(e.imag()) > 1e-10 * (1.0 + std::abs(e.real()))) {
          throw numerical_error("build_hua_bellman: real-field entry came out non-real");
        }
        e = Complex(e.real(), 0.0);
      }
      H.entries(i, j) = e;
    } catch (...) {
#pragma omp critical(huakit_build_fail)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  const double scale = 1.0 + H.entries.cwiseAbs().maxCoeff();
  const double defect = (H.entries - H.entries.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12 * scale) {
    throw numerical_error("build_hua_bellman: kernel matrix is not Hermitian to tolerance");
  }
  if (alpha >= 0.0) {
    for (int i = 0; i < m; ++i) {
      if (H.entries(i, i).real() < 1.0 - 1e-12 * scale) {
        throw numerical_error("build_hua_bellman: diagonal entry below 1 for alpha >= 0");
      }
    }
  }
  return H;
}

PDReport pd_check(const CMatrix& H, double tol) {
  require_finite(H, "pd_check");
  require_square(H, "pd_check");
  if (!(tol >= 0.0)) throw validation_error("pd_check: tolerance must be >= 0");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw numerical_error("pd_check: eigensolver failed");
  PDReport r;
  r.min_eigenvalue = es.eigenvalues()(0);
  r.tolerance = tol;
  r.fingerprint = fnv1a_matrix(H);
  if (r.min_eigenvalue > tol) {
    r.verdict = Verdict::positive_definite;
  } else if (r.min_eigenvalue >= -tol) {
    r.verdict = Verdict::positive_semidefinite;
  } else {
    r.verdict = Verdict::indefinite;
  }
  return r;
}

PDReport pd_check(const HuaBellmanMatrix& H, double tol) { return pd_check(H.entries, tol); }

RMatrix symmetrized_bellman(const std::vector<Contraction>& family, double alpha) {
  if (family.empty()) throw validation_error("symmetrized_bellman: empty family");
  const Eigen::Index n = family.front().dim();
  const int m = static_cast<int>(family.size());
  for (const Contraction& c : family) {
    if (!is_exactly_real(c.matrix())) {
      throw validation_error("symmetrized_bellman: requires real matrices");
    }
    if (c.dim() != n) throw validation_error("symmetrized_bellman: dimension mismatch");
  }
  RMatrix S(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const CMatrix G = family[i].matrix().transpose() * family[j].matrix();
      const CMatrix M = CMatrix::Identity(n, n) - symmetrize(G);
      S(i, j) = std::exp(-alpha * log_det_right_halfplane(M).real());
    }
  }
  return S;
}

OstrowskiResult ostrowski_check(const Contraction& A, const Contraction& B) {
  check_same_dim(A, B, "ostrowski_check");
  if (!is_exactly_real(A.matrix()) || !is_exactly_real(B.matrix())) {
    throw validation_error("ostrowski_check: requires real matrices");
  }
  const Eigen::Index n = A.dim();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix G = A.matrix().transpose() * B.matrix();
  OstrowskiResult r;
  r.lhs = (I - G).determinant().real();
  r.rhs = (I - symmetrize(G)).determinant().real();
  r.holds = r.lhs >= r.rhs - 1e-12 * (1.0 + std::abs(r.rhs));
  return r;
}

std::vector<RMatrix> counterexample_integer_matrices() {
  std::vector<RMatrix> out;
  const int raw[6][2][2] = {
      {{-2, -9}, {-5, -10}}, {{9, -5}, {9, 6}},   {{-10, -3}, {-6, 3}},
      {{-8, -8}, {1, -10}},  {{-2, 1}, {-6, -1}}, {{-1, 3}, {10, -6}},
  };
  for (const auto& e : raw) {
    RMatrix M(2, 2);
    M << e[0][0], e[0][1], e[1][0], e[1][1];
    out.push_back(M);
  }
  return out;
}

namespace {

Contraction scale_to_norm(const RMatrix& M, double target) {
  const CMatrix C = M.cast<Complex>();
  const double norm = spectral_norm(C);
  if (norm == 0.0) throw validation_error("scale_to_norm: zero matrix");
  return as_contraction(C * (target / norm));
}

}  // namespace

CounterexampleRecord bellman_counterexample_replay() {
  std::vector<Contraction> family;
  for (const RMatrix& M : counterexample_integer_matrices()) {
    family.push_back(scale_to_norm(M, 0.5));
  }
  CounterexampleRecord rec;
  rec.alpha = 0.5;
  rec.min_eigenvalue = family_min_eigenvalue(family, 0.5, Field::real);
  rec.matrices = std::move(family);
  return rec;
}

double family_min_eigenvalue(const std::vector<Contraction>& family, double alpha,
                             Field field) {
  const HuaBellmanMatrix H = build_hua_bellman(family, alpha, field);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H.entries, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw numerical_error("family_min_eigenvalue: eigensolver failed");
  }
  return es.eigenvalues()(0);
}

SearchResult counterexample_search(const SearchParams& params) {
  if (params.m < 1) throw validation_error("counterexample_search: m must be >= 1");
  if (params.n < 1) throw validation_error("counterexample_search: n must be >= 1");
  if (params.entry_bound < 1) {
    throw validation_error("counterexample_search: entry_bound must be >= 1");
  }
  if (!(params.target_norm > 0.0) || params.target_norm > 1.0 - kContractionMargin) {
    throw validation_error("counterexample_search: target_norm must lie in (0, 1)");
  }
  if (!(params.tol > 0.0)) throw validation_error("counterexample_search: tol must be > 0");

  const std::int64_t trials = static_cast<std::int64_t>(params.trials);
  std::vector<double> lambda(params.trials);
  std::vector<std::uint8_t> violating(params.trials, 0);

  auto draw_family = [&params](std::uint64_t trial) {
    Stream stream = substream(params.seed, trial);
    std::vector<Contraction> family;
    family.reserve(static_cast<std::size_t>(params.m));
    for (int k = 0; k < params.m; ++k) {
      RMatrix M(params.n, params.n);
      bool all_zero = true;
      do {
        all_zero = true;
        for (int i = 0; i < params.n; ++i) {
          for (int j = 0; j < params.n; ++j) {
            M(i, j) = static_cast<double>(
                stream.uniform_int(-params.entry_bound, params.entry_bound));
            if (M(i, j) != 0.0) all_zero = false;
          }
        }
      } while (all_zero);  // redraw within the trial's own stream
      family.push_back(scale_to_norm(M, params.target_norm));
    }
    return family;
  };

  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers())
  for (std::int64_t t = 0; t < trials; ++t) {
    try {
      const std::vector<Contraction> family = draw_family(static_cast<std::uint64_t>(t));
      const double lmin = family_min_eigenvalue(family, params.alpha, Field::real);
      lambda[t] = lmin;
      if (lmin < -params.tol) violating[t] = 1;
    } catch (...) {
#pragma omp critical(huakit_search_fail)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SearchResult out;
  out.summary.trials = params.trials;
  for (std::int64_t t = 0; t < trials; ++t) {
    if (!violating[t]) continue;
    CounterexampleRecord rec;
    rec.matrices = draw_family(static_cast<std::uint64_t>(t));
    rec.alpha = params.alpha;
    rec.min_eigenvalue = lambda[t];
    rec.seed = params.seed;
    rec.trial = static_cast<std::uint64_t>(t);
    out.records.push_back(std::move(rec));
  }
  out.summary.violations = out.records.size();
  if (params.trials > 0) {
    out.summary.has_data = true;
    std::vector<double> sorted = lambda;
    std::sort(sorted.begin(), sorted.end());
    out.summary.min_lambda = sorted.front();
    const std::size_t mid = sorted.size() / 2;
    out.summary.median_lambda = (sorted.size() % 2 == 1)
                                    ? sorted[mid]
                                    : 0.5 * (sorted[mid - 1] + sorted[mid]);
  }
  return out;
}

}  // namespace huakit
