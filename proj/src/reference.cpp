#include "huakit/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "huakit/alpha_perm.hpp"
#include "huakit/rng.hpp"

namespace huakit::ref {

namespace {

void check_input(const CMatrix& A, int cap, const char* what) {
  require_square(A, what);
  require_finite(A, what);
  if (A.rows() > cap) throw capacity_error(std::string(what) + ": n exceeds cap");
}

}  // namespace

Complex alpha_permanent(const CMatrix& A, Complex alpha, int cap) {
  check_input(A, cap, "ref::alpha_permanent");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return Complex(1.0, 0.0);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Complex sum(0.0, 0.0);
  do {
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= A(i, perm[i]);
    Complex w(1.0, 0.0);
    for (int c = cycle_count(perm); c > 0; --c) w *= alpha;
    sum += w * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Complex immanant(const CMatrix& A, const Partition& lambda, int cap) {
  check_input(A, cap, "ref::immanant");
  const int n = static_cast<int>(A.rows());
  if (lambda.n() != n) throw validation_error("ref::immanant: wrong partition size");
  if (n == 0) return Complex(1.0, 0.0);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Complex sum(0.0, 0.0);
  do {
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= A(i, perm[i]);
    sum += static_cast<double>(character(lambda, cycle_type(perm))) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

HuaBellmanMatrix build_hua_bellman(const std::vector<Contraction>& family, double alpha,
                                   Field field) {
  if (family.empty()) throw validation_error("ref::build_hua_bellman: empty family");
  const Eigen::Index n = family.front().dim();
  const int m = static_cast<int>(family.size());
  HuaBellmanMatrix H;
  H.alpha = alpha;
  H.field = field;
  H.source = family;
  H.entries.resize(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (family[i].dim() != n || family[j].dim() != n) {
        throw validation_error("ref::build_hua_bellman: dimension mismatch");
      }
      const CMatrix M = CMatrix::Identity(n, n) -
                        family[i].matrix().adjoint() * family[j].matrix();
      Complex e = std::exp(-alpha * log_det_right_halfplane(M));
      if (field == Field::real) e = Complex(e.real(), 0.0);
      H.entries(i, j) = e;
    }
  }
  return H;
}

SearchResult counterexample_search(const SearchParams& params) {
  if (params.m < 1 || params.n < 1 || params.entry_bound < 1) {
    throw validation_error("ref::counterexample_search: bad parameters");
  }
  SearchResult out;
  out.summary.trials = params.trials;
  std::vector<double> lambda;
  lambda.reserve(params.trials);
  for (std::uint64_t t = 0; t < params.trials; ++t) {
    Stream stream = substream(params.seed, t);
    std::vector<Contraction> family;
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
      } while (all_zero);
      const CMatrix C = M.cast<Complex>();
      family.push_back(as_contraction(C * (params.target_norm / spectral_norm(C))));
    }
    const HuaBellmanMatrix H = ref::build_hua_bellman(family, params.alpha, Field::real);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H.entries, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    lambda.push_back(lmin);
    if (lmin < -params.tol) {
      CounterexampleRecord rec;
      rec.matrices = family;
      rec.alpha = params.alpha;
      rec.min_eigenvalue = lmin;
      rec.seed = params.seed;
      rec.trial = t;
      out.records.push_back(std::move(rec));
    }
  }
  out.summary.violations = out.records.size();
  if (!lambda.empty()) {
    out.summary.has_data = true;
    std::sort(lambda.begin(), lambda.end());
    out.summary.min_lambda = lambda.front();
    const std::size_t mid = lambda.size() / 2;
    out.summary.median_lambda = (lambda.size() % 2 == 1)
                                    ? lambda[mid]
                                    : 0.5 * (lambda[mid - 1] + lambda[mid]);
  }
  return out;
}

double triangle_suite(std::uint64_t seed, int count, TriangleMetric which, int n, double p) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < count; ++t) {
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
  }
  return worst;
}

}  // namespace huakit::ref
