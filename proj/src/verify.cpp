#include "huakit/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "huakit/alpha_perm.hpp"
#include "huakit/hua_kernel.hpp"
#include "huakit/rng.hpp"

namespace huakit {

namespace {

constexpr double kPermTol = 1e-9;
constexpr double kIdentityTol = 1e-10;
constexpr double kChainTol = 1e-9;
constexpr double kLemmaTol = 1e-10;
constexpr double kTriangleTol = 1e-10;
constexpr double kSymmetryTol = 1e-12;
constexpr double kFactorizationTol = 1e-12;
constexpr double kMacmahonTol = 1e-6;
constexpr double kConcavityTol = 1e-8;

Stream item_stream(std::uint64_t seed, std::uint64_t salt, std::uint64_t t) {
  return substream(seed ^ mix64(salt), t);
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

void require_count(int count) {
  if (count < 1) throw validation_error("verify: count must be >= 1");
}

// Independent permanent: inclusion-exclusion over column subsets.
Complex permanent_ie(const CMatrix& A) {
  const int n = static_cast<int>(A.rows());
  if (n == 0) return Complex(1.0, 0.0);
  Complex sum(0.0, 0.0);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
      Complex row(0.0, 0.0);
      for (int j = 0; j < n; ++j) {
        if (s & (1u << j)) row += A(i, j);
      }
      prod *= row;
    }
    const int parity = (n - std::popcount(s)) % 2;
    sum += (parity ? -prod : prod);
  }
  return sum;
}

double rising_factorial(double alpha, int m) {
  double r = 1.0;
  for (int k = 0; k < m; ++k) r *= (alpha + k);
  return r;
}

}  // namespace

CheckResult check_perm_special_cases(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "perm_special_cases";
  r.tolerance = kPermTol;
  double worst = 0.0;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x70657231, static_cast<std::uint64_t>(t));
    const int n = 1 + t % 6;
    const CMatrix A = sample_gaussian(stream, n);
    const Complex p1 = alpha_permanent(A, Complex(1.0, 0.0));
    const Complex perm = permanent_ie(A);
    worst = std::max(worst, std::abs(p1 - perm) / (1.0 + std::abs(perm)));
    const Complex pm1 = alpha_permanent(A, Complex(-1.0, 0.0));
    const Complex det = (n % 2 ? -A.determinant() : A.determinant());
    worst = std::max(worst, std::abs(pm1 - det) / (1.0 + std::abs(det)));
  }
  r.worst = worst;
  r.passed = worst <= r.tolerance;
  r.detail = "per_1 vs permanent, per_-1 vs signed det, " + std::to_string(count) +
             " matrices";
  return r;
}

CheckResult check_perm_immanant_route(std::uint64_t seed, int count) {
  require_count(count);
  static const Complex alphas[] = {{-2.0, 0.0}, {-1.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}, {2.7, 0.0}};
  CheckResult r;
  r.name = "perm_immanant_route";
  r.tolerance = kPermTol;
  double worst = 0.0;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x70657232, static_cast<std::uint64_t>(t));
    const int n = 2 + t % 4;
    const CMatrix A = sample_gaussian(stream, n);
    const Complex alpha = alphas[t % 5];
    const Complex direct = alpha_permanent(A, alpha);
    const Complex via = per_via_immanants(A, alpha);
    worst = std::max(worst, std::abs(direct - via) / (1.0 + std::abs(direct)));
  }
  r.worst = worst;
  r.passed = worst <= r.tolerance;
  r.detail = "immanant decomposition vs direct enumeration, " + std::to_string(count) +
             " matrices";
  return r;
}

CheckResult check_hua_identity(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "hua_identity";
  r.tolerance = kIdentityTol;
  double worst = 0.0;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x68756131, static_cast<std::uint64_t>(t));
    const int n = 2 + t % 2;
    const Contraction A = sample_contraction(stream, n);
    const Contraction B = sample_contraction(stream, n);
    worst = std::max(worst, hua_identity_residual(A, B));
  }
  r.worst = worst;
  r.passed = worst <= r.tolerance;
  r.detail = std::to_string(count) + " contraction pairs";
  return r;
}

CheckResult check_ostrowski_inequality(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "ostrowski_inequality";
  r.tolerance = kFactorizationTol;
  double worst = -std::numeric_limits<double>::infinity();
  bool all_hold = true;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x6f737431, static_cast<std::uint64_t>(t));
    const int n = 2 + t % 2;
    const Contraction A = sample_real_contraction(stream, n);
    const Contraction B = sample_real_contraction(stream, n);
    const OstrowskiResult o = ostrowski_check(A, B);
    all_hold = all_hold && o.holds;
    worst = std::max(worst, o.rhs - o.lhs);
  }
  r.worst = std::max(worst, 0.0);
  r.passed = all_hold;
  r.detail = "worst rhs - lhs excess " + sci(worst) + " over " + std::to_string(count) +
             " real pairs";
  return r;
}

CheckResult check_macmahon_matrix_truncation(int order) {
  if (order < 8 || order > 14) {
    throw validation_error("macmahon truncation: order must lie in [8, 14]");
  }
  CheckResult r;
  r.name = "macmahon_matrix_truncation";
  r.tolerance = kMacmahonTol;

  // Positive entries make every series term nonnegative, so partial sums climb
  // monotonically; the off-diagonal imbalance keeps the spectral radius well
  // below the operator norm and the order-12 tail tiny.
  CMatrix A(2, 2);
  A << Complex(0.3, 0.0), Complex(1.0, 0.0), Complex(0.02, 0.0), Complex(0.25, 0.0);
  CVector x0(2);
  x0 << Complex(1.0, 0.0), Complex(0.9, 0.0);
  const double s = 0.3 / spectral_norm(x0.asDiagonal() * A);
  const CVector x = s * x0;

  const CMatrix M = CMatrix::Identity(2, 2) - CMatrix(x.asDiagonal()) * A;
  double worst = 0.0;
  bool monotone = true;
  for (double alpha : {0.5, 1.5, 3.0}) {
    const Complex truth = std::exp(-alpha * log_det_right_halfplane(M));
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= order; ++k) {
      const double err = std::abs(macmahon_partial_sum(A, x, Complex(alpha, 0.0), k) - truth);
      if (err > prev * (1.0 + 1e-12) + 1e-15) monotone = false;
      prev = err;
    }
    worst = std::max(worst, prev / std::max(1.0, std::abs(truth)));
  }
  r.worst = worst;
  r.passed = monotone && worst <= r.tolerance;
  r.detail = std::string("alpha in {0.5, 1.5, 3}, ||XA|| = 0.3, truncation error ") +
             (monotone ? "monotone" : "NOT monotone");
  return r;
}

CheckResult check_macmahon_scalar_series() {
  CheckResult r;
  r.name = "macmahon_scalar_series";
  r.tolerance = 1e-12;

  bool coefficients_exact = true;
  double worst = 0.0;
  const CMatrix one = CMatrix::Constant(1, 1, Complex(1.0, 0.0));
  for (double alpha : {2.0, 0.5}) {
    // per_alpha of the all-ones m x m block is the rising factorial; every
    // intermediate is a dyadic rational well under 2^53, so equality is exact.
    BlockPermanent bp(one, Complex(alpha, 0.0));
    for (int m = 0; m <= 12; ++m) {
      const Complex v = bp.value(MultiIndex(std::vector<int>{m}));
      if (v.real() != rising_factorial(alpha, m) || v.imag() != 0.0) {
        coefficients_exact = false;
      }
    }
    for (int m = 0; m <= 7; ++m) {
      const CMatrix J = CMatrix::Constant(m, m, Complex(1.0, 0.0));
      const Complex v = alpha_permanent(J, Complex(alpha, 0.0));
      if (v.real() != rising_factorial(alpha, m) || v.imag() != 0.0) {
        coefficients_exact = false;
      }
    }

    const double q = 0.25;
    CVector x(1);
    x << Complex(q, 0.0);
    for (int order = 0; order <= 12; ++order) {
      const Complex sum = macmahon_partial_sum(one, x, Complex(alpha, 0.0), order);
      double binom = 0.0;
      double qm = 1.0;
      for (int m = 0; m <= order; ++m) {
        binom += rising_factorial(alpha, m) / static_cast<double>(factorial(m)) * qm;
        qm *= q;
      }
      worst = std::max(worst, std::abs(sum - Complex(binom, 0.0)) / (1.0 + binom));
    }
  }
  r.worst = worst;
  r.passed = coefficients_exact && worst <= r.tolerance;
  r.detail = std::string("rising-factorial coefficients ") +
             (coefficients_exact ? "bit-exact" : "NOT exact") +
             ", partial sums vs binomial series";
  return r;
}

CheckResult check_block_factorization(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "block_factorization";
  r.tolerance = kFactorizationTol;
  double worst = 0.0;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x626c6b31, static_cast<std::uint64_t>(t));
    const int n = 2 + t % 2;
    const Contraction A = sample_contraction(stream, n);
    const Contraction B = sample_contraction(stream, n);
    std::vector<int> m(n, 0);
    const int total = 1 + t % 6;
    for (int u = 0; u < total; ++u) {
      m[static_cast<std::size_t>(stream.uniform_int(0, n - 1))] += 1;
    }
    worst = std::max(worst, selection_factorization_check(A, B, MultiIndex(m)));
  }
  r.worst = worst;
  r.passed = worst <= r.tolerance;
  r.detail = std::to_string(count) + " (A, B, m) draws, |m| <= 6";
  return r;
}

CheckResult check_hua_block_pd(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "hua_block_pd";
  r.tolerance = kPdRelTol;
  double worst = -std::numeric_limits<double>::infinity();
  bool ok = true;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x68626c6b, static_cast<std::uint64_t>(t));
    const int n = 2 + t % 2;
    const Contraction A = sample_contraction(stream, n);
    const Contraction B = sample_contraction(stream, n);
    const PDReport rep = hua_block_psd(A, B);
    ok = ok && rep.verdict != Verdict::indefinite;
    // rep.tolerance is kPdRelTol * |trace|; normalize back to a trace-relative slack
    worst = std::max(worst, -rep.min_eigenvalue * kPdRelTol / rep.tolerance);
  }
  r.worst = std::max(worst, 0.0);
  r.passed = ok;
  r.detail = "block matrices of inverses over " + std::to_string(count) + " pairs";
  return r;
}

CheckResult check_admissible_kernels(std::uint64_t seed, int count) {
  require_count(count);
  static const double complex_alphas[] = {1.0, 2.0, 3.0};
  static const double real_alphas[] = {0.5, 1.0, 1.5, 2.0};
  CheckResult r;
  r.name = "admissible_kernels";
  r.tolerance = kPdRelTol;
  double worst = -std::numeric_limits<double>::infinity();
  bool ok = true;
  int instances = 0;
  for (int cls = 0; cls < 3; ++cls) {
    for (int t = 0; t < count; ++t) {
      Stream stream =
          item_stream(seed, 0x61646d30ULL + static_cast<std::uint64_t>(cls),
                      static_cast<std::uint64_t>(t));
      const int n = 2 + static_cast<int>(stream.next_u64() & 1);
      double alpha = 0.0;
      Field field = Field::complex;
      switch (cls) {
        case 0: alpha = complex_alphas[t % 3]; break;
        case 1:
          alpha = real_alphas[t % 4];
          field = Field::real;
          break;
        default: alpha = stream.uniform(n - 1 + 0.01, n + 2); break;
      }
      std::vector<Contraction> family;
      for (int k = 0; k < 5; ++k) {
        family.push_back(field == Field::real ? sample_real_contraction(stream, n)
                                              : sample_contraction(stream, n));
      }
      const HuaBellmanMatrix H = build_hua_bellman(family, alpha, field);
      const double trace = H.entries.trace().real();
      const PDReport rep = pd_check(H, kPdRelTol * std::abs(trace));
      if (!exponent_admissible(alpha, n, field)) {
        throw numerical_error("check_admissible_kernels: drew an inadmissible exponent");
      }
      ok = ok && rep.verdict != Verdict::indefinite;
      worst = std::max(worst, -rep.min_eigenvalue / std::abs(trace));
      ++instances;
    }
  }
  r.worst = std::max(worst, 0.0);
  r.passed = ok;
  r.detail = std::to_string(instances) +
             " kernels (complex {1,2,3}, real {1/2..2}, sampled (n-1, n+2])";
  return r;
}

CheckResult check_branden_nonnegativity(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "branden_nonnegativity";
  r.tolerance = kPdRelTol;
  double worst = -std::numeric_limits<double>::infinity();
  int values = 0;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x62726e31, static_cast<std::uint64_t>(t));
    const bool real_case = t % 2 == 0;
    const int n = 2 + (t / 2) % 2;
    const CMatrix A = real_case ? CMatrix(sample_gaussian_real(stream, n).cast<Complex>())
                                : sample_gaussian(stream, n);
    const CMatrix B = A.adjoint() * A;

    std::vector<double> alphas = {1.0, 2.0, 3.0};
    if (real_case) {
      alphas.push_back(0.5);
      alphas.push_back(1.5);
    }
    alphas.push_back(stream.uniform(n - 1 + 0.01, n + 2));

    std::vector<std::vector<int>> indices;
    std::vector<int> m(n, 0);
    auto enumerate = [&](auto&& self, int pos, int budget) -> void {
      if (pos == n - 1) {
        for (int v = 0; v <= budget; ++v) {
          m[pos] = v;
          indices.push_back(m);
        }
        return;
      }
      for (int v = 0; v <= budget; ++v) {
        m[pos] = v;
        self(self, pos + 1, budget - v);
      }
    };
    enumerate(enumerate, 0, 6);

    for (double alpha : alphas) {
      const Field field = real_case ? Field::real : Field::complex;
      if (!exponent_admissible(alpha, n, field)) {
        throw numerical_error("check_branden_nonnegativity: inadmissible exponent");
      }
      BlockPermanent bp(B, Complex(alpha, 0.0));
      for (const std::vector<int>& mi : indices) {
        const Complex v = bp.value(MultiIndex(mi));
        const double scale = 1.0 + std::abs(v);
        worst = std::max(worst, std::max(-v.real(), std::abs(v.imag())) / scale);
        ++values;
      }
    }
  }
  r.worst = std::max(worst, 0.0);
  r.passed = worst <= r.tolerance;
  r.detail = std::to_string(values) + " values per_alpha((A^*A)[m]), |m| <= 6, over " +
             std::to_string(count) + " matrices";
  return r;
}

CheckResult observe_inadmissible_kernels(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "inadmissible_kernels_observed";
  r.tolerance = 0.0;
  int pd = 0, psd = 0, indefinite = 0;
  double most_negative = 0.0;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x696e6164, static_cast<std::uint64_t>(t));
    std::vector<Contraction> family;
    for (int k = 0; k < 5; ++k) family.push_back(sample_contraction(stream, 2));
    const HuaBellmanMatrix H = build_hua_bellman(family, 0.5, Field::complex);
    const double trace = H.entries.trace().real();
    const PDReport rep = pd_check(H, kPdRelTol * std::abs(trace));
    switch (rep.verdict) {
      case Verdict::positive_definite: ++pd; break;
      case Verdict::positive_semidefinite: ++psd; break;
      case Verdict::indefinite: ++indefinite; break;
    }
    most_negative = std::min(most_negative, rep.min_eigenvalue / std::abs(trace));
  }
  r.worst = -most_negative;
  r.passed = true;  // report-only: alpha = 0.5 is outside the complex exponent set
  std::ostringstream os;
  os << "alpha = 0.5 complex n = 2 (inadmissible): " << pd << " PD, " << psd << " PSD, "
     << indefinite << " indefinite of " << count;
  r.detail = os.str();
  return r;
}

CheckResult check_metric_axioms(TriangleMetric which, std::uint64_t seed, int count) {
  require_count(count);
  static const double ps[] = {0.5, 1.0, 1.5, 2.0};
  CheckResult r;
  switch (which) {
    case TriangleMetric::hua: r.name = "metric_axioms_hua"; break;
    case TriangleMetric::sdiv: r.name = "metric_axioms_sdiv"; break;
    case TriangleMetric::deltap: r.name = "metric_axioms_deltap"; break;
  }
  r.tolerance = kTriangleTol;
  double worst_tri = -std::numeric_limits<double>::infinity();
  double worst_sym = 0.0;
  double min_value = std::numeric_limits<double>::infinity();
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x6d657430ULL + static_cast<std::uint64_t>(which),
                                static_cast<std::uint64_t>(t));
    const int n = 2 + t % 2;
    double dab = 0.0, dba = 0.0, dac = 0.0, dcb = 0.0;
    switch (which) {
      case TriangleMetric::hua: {
        const Contraction A = sample_contraction(stream, n);
        const Contraction B = sample_contraction(stream, n);
        const Contraction C = sample_contraction(stream, n);
        dab = hua_distance_sq(A, B).value;
        dba = hua_distance_sq(B, A).value;
        dac = hua_distance_sq(A, C).value;
        dcb = hua_distance_sq(C, B).value;
        break;
      }
      case TriangleMetric::sdiv: {
        const HermitianMatrix X = sample_hpd(stream, n);
        const HermitianMatrix Y = sample_hpd(stream, n);
        const HermitianMatrix Z = sample_hpd(stream, n);
        dab = s_divergence(X, Y).value;
        dba = s_divergence(Y, X).value;
        dac = s_divergence(X, Z).value;
        dcb = s_divergence(Z, Y).value;
        break;
      }
      case TriangleMetric::deltap: {
        const double p = ps[t % 4];
        const CMatrix X = sample_gaussian(stream, n);
        const CMatrix Y = sample_gaussian(stream, n);
        const CMatrix Z = sample_gaussian(stream, n);
        dab = delta_p_sq(X, Y, p).value;
        dba = delta_p_sq(Y, X, p).value;
        dac = delta_p_sq(X, Z, p).value;
        dcb = delta_p_sq(Z, Y, p).value;
        break;
      }
    }
    worst_tri = std::max(worst_tri, dab - dac - dcb);
    worst_sym = std::max(worst_sym, std::abs(dab - dba));
    min_value = std::min({min_value, dab, dac, dcb});
  }
  r.worst = std::max(worst_tri, 0.0);
  r.passed = worst_tri <= kTriangleTol && worst_sym <= kSymmetryTol && min_value >= 0.0;
  r.detail = "worst symmetry gap " + sci(worst_sym) + ", min value " + sci(min_value) +
             ", " + std::to_string(count) + " triples";
  return r;
}

CheckResult check_distance_chain(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "distance_chain";
  r.tolerance = kChainTol;
  double worst_chain = 0.0;
  double worst_lemma = 0.0;
  bool re_pd = true;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x6368616e, static_cast<std::uint64_t>(t));
    const int n = 2 + t % 2;
    const Contraction A = sample_contraction(stream, n);
    const Contraction B = sample_contraction(stream, n);
    const MobiusPair mp = mobius_transform(A, B);
    worst_lemma = std::max({worst_lemma, mp.residual_identity, mp.residual_real_part});
    re_pd = re_pd && mp.min_re_eig_x > 0.0 && mp.min_re_eig_y > 0.0;

    const double d2 = hua_distance_sq(A, B).squared;
    const double h2 = delta_halfplane_sq(mp.X, mp.Y).squared;
    const DecompositionResult dec = decomposition_check(mp.X, mp.Y);
    const double scale = 1.0 + std::max(std::abs(d2), std::abs(h2));
    worst_chain = std::max({worst_chain, std::abs(d2 - h2) / scale, dec.residual});
  }
  r.worst = worst_chain;
  r.passed = worst_chain <= kChainTol && worst_lemma <= kLemmaTol && re_pd;
  r.detail = "Cayley residuals <= " + sci(worst_lemma) + ", Re X " +
             (re_pd ? "PD" : "NOT PD") + ", " + std::to_string(count) + " pairs";
  return r;
}

CheckResult check_concavity_grid() {
  CheckResult r;
  r.name = "concavity_grid";
  r.tolerance = kConcavityTol;
  std::vector<double> grid(200);
  for (int i = 0; i < 200; ++i) {
    grid[static_cast<std::size_t>(i)] =
        0.01 * std::pow(1e4, static_cast<double>(i) / 199.0);
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (double p : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    worst = std::max(worst, concavity_profile(p, grid));
  }
  r.worst = worst;
  r.passed = worst <= r.tolerance;
  r.detail = "p in {0.25, 0.5, 1, 1.5, 2}, 200-point log grid on [0.01, 100]";
  return r;
}

CheckResult check_uchiyama_majorization(std::uint64_t seed, int count) {
  require_count(count);
  CheckResult r;
  r.name = "uchiyama_majorization";
  r.tolerance = kSymmetryTol;
  double worst = -std::numeric_limits<double>::infinity();
  bool ok = true;
  for (int t = 0; t < count; ++t) {
    Stream stream = item_stream(seed, 0x75636831, static_cast<std::uint64_t>(t));
    const int n = 2 + t % 3;
    const CMatrix A = sample_gaussian(stream, n);
    const CMatrix B = sample_gaussian(stream, n);
    for (double p : {0.5, 1.0, 2.0}) {
      ok = ok && uchiyama_check(A, B, p);
      const RVector sa = singular_values(A);
      const RVector sb = singular_values(B);
      const RVector sc = singular_values(A + B);
      double lhs = 0.0, rhs = 0.0;
      for (Eigen::Index i = 0; i < sc.size(); ++i) {
        lhs += f_log_power(sc(i), p);
        rhs += f_log_power(sa(i), p) + f_log_power(sb(i), p);
        worst = std::max(worst, lhs - rhs);
      }
    }
  }
  r.worst = std::max(worst, 0.0);
  r.passed = ok;
  r.detail = "p in {0.5, 1, 2}, worst partial-sum excess " + sci(worst) + ", " +
             std::to_string(count) + " pairs";
  return r;
}

SuiteResult run_identities_suite(std::uint64_t seed, int count, int order) {
  SuiteResult s;
  s.name = "identities";
  s.add(check_perm_special_cases(seed, count));
  s.add(check_perm_immanant_route(seed, count));
  s.add(check_hua_identity(seed, count));
  s.add(check_ostrowski_inequality(seed, count));
  s.add(check_macmahon_matrix_truncation(order));
  s.add(check_macmahon_scalar_series());
  s.add(check_block_factorization(seed, count));
  return s;
}

SuiteResult run_pd_suite(std::uint64_t seed, int count) {
  SuiteResult s;
  s.name = "pd";
  s.add(check_hua_block_pd(seed, count));
  s.add(check_admissible_kernels(seed, count));
  s.add(check_branden_nonnegativity(seed, std::min(count, 50)));
  s.add(observe_inadmissible_kernels(seed, std::min(count, 100)));
  return s;
}

SuiteResult run_metric_suite(std::uint64_t seed, int count) {
  SuiteResult s;
  s.name = "metric";
  s.add(check_metric_axioms(TriangleMetric::hua, seed, count));
  s.add(check_metric_axioms(TriangleMetric::sdiv, seed, count));
  s.add(check_metric_axioms(TriangleMetric::deltap, seed, count));
  s.add(check_distance_chain(seed, count));
  return s;
}

SuiteResult run_majorization_suite(std::uint64_t seed, int count) {
  SuiteResult s;
  s.name = "majorization";
  s.add(check_concavity_grid());
  s.add(check_uchiyama_majorization(seed, count));
  return s;
}

std::vector<SuiteResult> run_verify(const std::string& which, std::uint64_t seed, int count,
                                    int order) {
  require_count(count);
  std::vector<SuiteResult> out;
  if (which == "identities" || which == "all") {
    out.push_back(run_identities_suite(seed, count, order));
  }
  if (which == "pd" || which == "all") out.push_back(run_pd_suite(seed, count));
  if (which == "metric" || which == "all") out.push_back(run_metric_suite(seed, count));
  if (which == "majorization" || which == "all") {
    out.push_back(run_majorization_suite(seed, count));
  }
  if (out.empty()) {
    throw validation_error("verify: unknown suite '" + which +
                           "' (identities, pd, metric, majorization, all)");
  }
  return out;
}

}  // namespace huakit
