#include "huakit/alpha_perm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "huakit/parallel.hpp"

namespace huakit {

namespace {

void check_perm_input(const CMatrix& A, int cap, const char* what) {
  require_square(A, what);
  require_finite(A, what);
  if (cap < 0 || cap > 20) throw validation_error(std::string(what) + ": bad cap");
  if (A.rows() > cap) {
    std::ostringstream os;
    os << what << ": n = " << A.rows() << " exceeds cap " << cap;
    throw capacity_error(os.str());
  }
}

inline int count_cycles_fast(const int* p, int n) {
  std::uint32_t visited = 0;
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (visited & (1u << i)) continue;
    ++cycles;
    int j = i;
    while (!(visited & (1u << j))) {
      visited |= 1u << j;
      j = p[j];
    }
  }
  return cycles;
}

inline Complex perm_product(const CMatrix& A, const int* p, int n) {
  Complex prod(1.0, 0.0);
  for (int i = 0; i < n; ++i) prod *= A(i, p[i]);
  return prod;
}

// Permutation ranks are split into fixed-size blocks; each block is summed in
// lexicographic order and block sums are combined in block order, so the result
// does not depend on how many threads ran.
constexpr std::uint64_t kRankBlock = 40320;

template <typename TermWeight>
Complex blocked_permutation_sum(const CMatrix& A, TermWeight&& weight) {
  const int n = static_cast<int>(A.rows());
  const std::uint64_t total = static_cast<std::uint64_t>(factorial(n));
  const std::uint64_t nblocks = (total + kRankBlock - 1) / kRankBlock;
  std::vector<Complex> partial(nblocks);

#pragma omp parallel for schedule(dynamic) num_threads(workers())
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    std::vector<int> perm = lexicographic_permutation(static_cast<std::uint64_t>(b) * kRankBlock, n);
    const std::uint64_t hi = std::min(total, (static_cast<std::uint64_t>(b) + 1) * kRankBlock);
    Complex acc(0.0, 0.0);
    for (std::uint64_t r = static_cast<std::uint64_t>(b) * kRankBlock; r < hi; ++r) {
      acc += weight(perm.data(), n) * perm_product(A, perm.data(), n);
      std::next_permutation(perm.begin(), perm.end());
    }
    partial[b] = acc;
  }

  Complex sum(0.0, 0.0);
  for (const Complex& c : partial) sum += c;
  return sum;
}

}  // namespace

std::vector<int> lexicographic_permutation(std::uint64_t rank, int n) {
  if (n < 0 || n > 20) throw validation_error("lexicographic_permutation: n out of range");
  if (rank >= static_cast<std::uint64_t>(factorial(n))) {
    throw validation_error("lexicographic_permutation: rank exceeds n! - 1");
  }
  std::vector<int> avail(n);
  for (int i = 0; i < n; ++i) avail[i] = i;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = static_cast<std::uint64_t>(factorial(n - 1 - i));
    const std::uint64_t d = rank / f;
    rank %= f;
    perm[i] = avail[d];
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return perm;
}

Complex alpha_permanent(const CMatrix& A, Complex alpha, int cap) {
  check_perm_input(A, cap, "alpha_permanent");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return Complex(1.0, 0.0);

  std::array<Complex, 21> apow;
  apow[0] = Complex(1.0, 0.0);
  for (int k = 1; k <= n; ++k) apow[k] = apow[k - 1] * alpha;

  return blocked_permutation_sum(A, [&](const int* p, int nn) {
    return apow[count_cycles_fast(p, nn)];
  });
}

Complex immanant(const CMatrix& A, const Partition& lambda, int cap) {
  check_perm_input(A, cap, "immanant");
  const int n = static_cast<int>(A.rows());
  if (lambda.n() != n) {
    throw validation_error("immanant: lambda must be a partition of the matrix dimension");
  }
  if (n == 0) return Complex(1.0, 0.0);

  // character table over cycle types, keyed by packed sorted cycle lengths
  const std::vector<Partition> types = partitions(n);
  std::vector<std::uint64_t> keys(types.size());
  std::vector<double> chi(types.size());
  for (std::size_t t = 0; t < types.size(); ++t) {
    std::uint64_t key = 0;
    for (int len : types[t].parts) key = (key << 4) | static_cast<std::uint64_t>(len);
    keys[t] = key;
    chi[t] = static_cast<double>(character(lambda, types[t]));
  }

  return blocked_permutation_sum(A, [&](const int* p, int nn) {
    std::array<int, 16> len{};
    int nl = 0;
    std::uint32_t visited = 0;
    for (int i = 0; i < nn; ++i) {
      if (visited & (1u << i)) continue;
      int l = 0;
      int j = i;
      while (!(visited & (1u << j))) {
        visited |= 1u << j;
        j = p[j];
        ++l;
      }
      len[nl++] = l;
    }
    std::sort(len.begin(), len.begin() + nl, std::greater<int>());
    std::uint64_t key = 0;
    for (int i = 0; i < nl; ++i) key = (key << 4) | static_cast<std::uint64_t>(len[i]);
    for (std::size_t t = 0; t < keys.size(); ++t) {
      if (keys[t] == key) return Complex(chi[t], 0.0);
    }
    return Complex(0.0, 0.0);  // unreachable for valid permutations
  });
}

Complex immanant_coefficient(const Partition& lambda, Complex alpha) {
  const int n = lambda.n();
  if (n < 1 || n > kPermanentCap) {
    throw capacity_error("immanant_coefficient: partition size out of range");
  }
  Complex sum(0.0, 0.0);
  for (const Partition& rho : partitions(n)) {
    Complex apow(1.0, 0.0);
    for (int k = 0; k < rho.length(); ++k) apow *= alpha;
    sum += static_cast<double>(conjugacy_class_size(rho)) * apow *
           static_cast<double>(character(lambda, rho));
  }
  return sum / static_cast<double>(factorial(n));
}

Complex per_via_immanants(const CMatrix& A, Complex alpha, int cap) {
  check_perm_input(A, cap, "per_via_immanants");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return Complex(1.0, 0.0);
  Complex sum(0.0, 0.0);
  for (const Partition& lambda : partitions(n)) {
    sum += immanant_coefficient(lambda, alpha) * immanant(A, lambda, cap);
  }
  return sum;
}

CMatrix block_expand(const CMatrix& A, const MultiIndex& m, int cap) {
  require_square(A, "block_expand");
  require_finite(A, "block_expand");
  if (m.size() != A.rows()) {
    throw validation_error("block_expand: multi-index length must equal matrix dimension");
  }
  const int total = m.order();
  if (total > cap) {
    std::ostringstream os;
    os << "block_expand: |m| = " << total << " exceeds cap " << cap;
    throw capacity_error(os.str());
  }
  CMatrix B(total, total);
  int roff = 0;
  for (int i = 0; i < m.size(); ++i) {
    int coff = 0;
    for (int j = 0; j < m.size(); ++j) {
      B.block(roff, coff, m.m[i], m.m[j]).setConstant(A(i, j));
      coff += m.m[j];
    }
    roff += m.m[i];
  }
  return B;
}

BlockPermanent::BlockPermanent(CMatrix A, Complex alpha) : A_(std::move(A)), alpha_(alpha) {
  require_square(A_, "BlockPermanent");
  require_finite(A_, "BlockPermanent");
  if (A_.rows() < 1 || A_.rows() > 15) {
    throw validation_error("BlockPermanent: dimension must lie in [1, 15]");
  }
}

namespace {

std::uint64_t pack_multiindex(const std::vector<int>& m) {
  std::uint64_t key = 0;
  for (int x : m) key = (key << 4) | static_cast<std::uint64_t>(x);
  return key;
}

}  // namespace

Complex BlockPermanent::value(const MultiIndex& m) {
  if (m.size() != A_.rows()) {
    throw validation_error("BlockPermanent: multi-index length must equal dimension");
  }
  for (int x : m.m) {
    if (x > 15) throw capacity_error("BlockPermanent: component exceeds 15");
  }
  std::vector<int> work = m.m;
  return compute(work);
}

Complex BlockPermanent::compute(std::vector<int>& m) {
  const int n = static_cast<int>(m.size());
  int t = -1;
  for (int i = 0; i < n; ++i) {
    if (m[i] > 0) {
      t = i;
      break;
    }
  }
  if (t < 0) return Complex(1.0, 0.0);

  const std::uint64_t key = pack_multiindex(m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // One cycle through the first item of type t: enumerate its closed type walk.
  // Extending to type j picks one of avail[j] interchangeable items (falling
  // factorials accumulate); closing multiplies by the return edge and recurses
  // on what is left.
  m[t] -= 1;
  Complex total(0.0, 0.0);
  auto dfs = [&](auto&& self, int c, Complex w) -> void {
    total += w * A_(c, t) * compute(m);
    for (int j = 0; j < n; ++j) {
      if (m[j] == 0) continue;
      const Complex w2 = w * A_(c, j) * static_cast<double>(m[j]);
      m[j] -= 1;
      self(self, j, w2);
      m[j] += 1;
    }
  };
  dfs(dfs, t, Complex(1.0, 0.0));
  m[t] += 1;

  const Complex result = alpha_ * total;
  memo_[key] = result;
  return result;
}

namespace {

CMatrix kron(const CMatrix& A, const CMatrix& B) {
  CMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

}  // namespace

double selection_factorization_check(const Contraction& A, const Contraction& B,
                                     const MultiIndex& m) {
  if (A.dim() != B.dim()) {
    throw validation_error("selection_factorization_check: dimension mismatch");
  }
  const int n = static_cast<int>(A.dim());
  if (m.size() != n) {
    throw validation_error("selection_factorization_check: multi-index length mismatch");
  }
  const int total = m.order();
  if (total > kPermanentCap) {
    throw capacity_error("selection_factorization_check: |m| exceeds cap");
  }
  const CMatrix G = A.matrix().adjoint() * B.matrix();
  const CMatrix expanded = block_expand(G, m, kPermanentCap);
  if (total == 0) return 0.0;

  // Q is block diagonal; block i selects columns [off_i, off_i + m_i) of I_{|m|}.
  RMatrix Q = RMatrix::Zero(static_cast<Eigen::Index>(n) * total, total);
  int off = 0;
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < m.m[i]; ++u) {
      Q(static_cast<Eigen::Index>(i) * total + off + u, off + u) = 1.0;
    }
    off += m.m[i];
  }
  const CMatrix ones = CMatrix::Constant(total, total, Complex(1.0, 0.0));
  const CMatrix projected = Q.cast<Complex>().adjoint() * kron(G, ones) * Q.cast<Complex>();
  return (projected - expanded).cwiseAbs().maxCoeff();
}

Complex macmahon_partial_sum(const CMatrix& A, const CVector& x, Complex alpha, int order) {
  require_square(A, "macmahon_partial_sum");
  require_finite(A, "macmahon_partial_sum");
  const int n = static_cast<int>(A.rows());
  if (x.size() != n) {
    throw validation_error("macmahon_partial_sum: x must have one entry per row of A");
  }
  if (order < 0 || order > 14) {
    throw validation_error("macmahon_partial_sum: order must lie in [0, 14]");
  }
  const CMatrix XA = x.asDiagonal() * A;
  const double r = spectral_norm(XA);
  if (r >= 1.0) {
    std::ostringstream os;
    os << "macmahon_partial_sum: ||XA|| = " << r << " >= 1, series diverges";
    throw validation_error(os.str());
  }

  BlockPermanent bp(A, alpha);
  Complex sum(0.0, 0.0);
  std::vector<int> m(n, 0);
  // graded order: degrees 0..order, compositions of each degree in lexicographic order
  auto enumerate = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      m[pos] = remaining;
      Complex xm(1.0, 0.0);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < m[i]; ++k) xm *= x(i);
      const MultiIndex mi(m);
      sum += xm / static_cast<double>(mi.factorial_product()) * bp.value(mi);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      m[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  for (int deg = 0; deg <= order; ++deg) enumerate(enumerate, 0, deg);
  return sum;
}

bool exponent_admissible(double alpha, int n, Field field) {
  if (n < 1) throw validation_error("exponent_admissible: n must be >= 1");
  if (!std::isfinite(alpha)) throw validation_error("exponent_admissible: alpha not finite");
  const auto is_integer = [](double v) { return v == std::nearbyint(v); };
  if (alpha > static_cast<double>(n - 1)) return true;
  if (alpha == 0.0) return true;
  if (field == Field::complex) return is_integer(alpha);
  if (alpha < 0.0) return is_integer(alpha);
  return is_integer(2.0 * alpha);  // positive half-integers
}

}  // namespace huakit
