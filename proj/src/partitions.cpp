#include "huakit/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace huakit {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw validation_error("Partition: parts must be >= 1");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw validation_error("Partition: parts must be non-increasing");
    }
  }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (n == 0) {
    Partition p;
    p.parts = prefix;
    out.push_back(std::move(p));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    emit_partitions(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1 || n > kPartitionCap) {
    std::ostringstream os;
    os << "partitions: n must lie in [1, " << kPartitionCap << "], got " << n;
    throw capacity_error(os.str());
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

long long factorial(int n) {
  if (n < 0 || n > 20) throw validation_error("factorial: n out of range [0, 20]");
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

int cycle_count(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n > 32) throw capacity_error("cycle_count: permutation too long");
  std::uint32_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || (seen & (1u << v))) {
      throw validation_error("cycle_count: not a permutation of {0,...,n-1}");
    }
    seen |= 1u << v;
  }
  std::uint32_t visited = 0;
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (visited & (1u << i)) continue;
    ++cycles;
    int j = i;
    while (!(visited & (1u << j))) {
      visited |= 1u << j;
      j = perm[j];
    }
  }
  return cycles;
}

CycleType cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  (void)cycle_count(perm);  // validates
  std::uint32_t visited = 0;
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (visited & (1u << i)) continue;
    int len = 0;
    int j = i;
    while (!(visited & (1u << j))) {
      visited |= 1u << j;
      j = perm[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::vector<int>>, long long>;

// Beta-set form of the Murnaghan-Nakayama rule: removing a border strip of
// size r is the move b -> b - r on first-column hook lengths, with sign
// (-1)^{#{beta numbers strictly between b-r and b}}.
long long mn_character(const std::vector<int>& lam, const std::vector<int>& rho, Memo& memo) {
  if (lam.empty()) return 1;
  const auto key = std::make_pair(lam, rho);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = rho.front();
  const std::vector<int> rest(rho.begin() + 1, rho.end());
  const int k = static_cast<int>(lam.size());
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = lam[i] + (k - 1 - i);  // strictly decreasing

  long long total = 0;
  for (int i = 0; i < k; ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < k; ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> nlam;
    const int kk = static_cast<int>(nb.size());
    for (int j = 0; j < kk; ++j) {
      const int part = nb[j] - (kk - 1 - j);
      if (part > 0) nlam.push_back(part);
    }
    const long long sub = mn_character(nlam, rest, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

long long character(const Partition& lambda, const CycleType& rho) {
  if (lambda.n() != rho.n()) {
    throw validation_error("character: lambda and rho must partition the same n");
  }
  Memo memo;
  return mn_character(lambda.parts, rho.parts, memo);
}

long long hook_length_product(const Partition& lambda) {
  const auto& p = lambda.parts;
  const int k = lambda.length();
  long long prod = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < p[i]; ++j) {
      const int arm = p[i] - j - 1;
      int leg = 0;
      for (int r = i + 1; r < k; ++r) {
        if (p[r] > j) ++leg;
      }
      prod *= arm + leg + 1;
    }
  }
  return prod;
}

long long irrep_dimension(const Partition& lambda) {
  if (lambda.n() == 0) return 1;
  return factorial(lambda.n()) / hook_length_product(lambda);
}

long long conjugacy_class_size(const CycleType& rho) {
  const int n = rho.n();
  long long z = 1;
  int i = 0;
  const int k = rho.length();
  while (i < k) {
    int j = i;
    while (j < k && rho.parts[j] == rho.parts[i]) ++j;
    const int mult = j - i;
    for (int t = 0; t < mult; ++t) z *= rho.parts[i];
    z *= factorial(mult);
    i = j;
  }
  return factorial(n) / z;
}

MultiIndex::MultiIndex(std::vector<int> v) : m(std::move(v)) {
  for (int x : m) {
    if (x < 0) throw validation_error("MultiIndex: components must be >= 0");
  }
}

int MultiIndex::order() const { return std::accumulate(m.begin(), m.end(), 0); }

long long MultiIndex::factorial_product() const {
  long long f = 1;
  for (int x : m) f *= factorial(x);
  return f;
}

}  // namespace huakit
