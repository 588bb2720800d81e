// Times the OpenMP kernels against the plain serial reference implementations
// and reports the agreement between the two, which must be tight regardless of
// the worker count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "huakit/alpha_perm.hpp"
#include "huakit/hua_kernel.hpp"
#include "huakit/metric.hpp"
#include "huakit/parallel.hpp"
#include "huakit/reference.hpp"
#include "huakit/rng.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms, double deviation) {
  std::printf("%-22s %10.1f %12.1f %9.2fx %12.2e\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, deviation);
}

}  // namespace

int main(int argc, char** argv) {
  int workers = 0;
  if (argc > 1) workers = std::atoi(argv[1]);
  huakit::set_workers(workers);

  std::printf("%-22s %10s %12s %10s %12s\n", "kernel", "serial ms",
              ("parallel(" + std::to_string(huakit::workers()) + ") ms").c_str(), "speedup",
              "max rel dev");

  {
    huakit::Stream s = huakit::substream(11, 0);
    const huakit::CMatrix A = huakit::sample_gaussian(s, 9);
    const huakit::Complex alpha(0.5, 0.0);
    huakit::Complex serial, parallel;
    const double ts = time_ms([&] { serial = huakit::ref::alpha_permanent(A, alpha); });
    const double tp = time_ms([&] { parallel = huakit::alpha_permanent(A, alpha); });
    row("alpha_permanent n=9", ts, tp, std::abs(serial - parallel) / (1.0 + std::abs(serial)));
  }

  {
    std::vector<huakit::Contraction> family;
    huakit::Stream s = huakit::substream(12, 0);
    for (int k = 0; k < 40; ++k) family.push_back(huakit::sample_contraction(s, 3));
    huakit::HuaBellmanMatrix serial, parallel;
    const double ts =
        time_ms([&] { serial = huakit::ref::build_hua_bellman(family, 2.0, huakit::Field::complex); });
    const double tp =
        time_ms([&] { parallel = huakit::build_hua_bellman(family, 2.0, huakit::Field::complex); });
    const double dev = (serial.entries - parallel.entries).cwiseAbs().maxCoeff() /
                       (1.0 + parallel.entries.cwiseAbs().maxCoeff());
    row("hua_bellman m=40 n=3", ts, tp, dev);
  }

  {
    huakit::SearchParams p;
    p.trials = 2000;
    p.seed = 7;
    huakit::SearchResult serial, parallel;
    const double ts = time_ms([&] { serial = huakit::ref::counterexample_search(p); });
    const double tp = time_ms([&] { parallel = huakit::counterexample_search(p); });
    double dev = std::abs(serial.summary.min_lambda - parallel.summary.min_lambda);
    dev = std::max(dev, std::abs(serial.summary.median_lambda - parallel.summary.median_lambda));
    dev = std::max(dev, static_cast<double>(serial.records.size() != parallel.records.size()));
    row("search trials=2000", ts, tp, dev);
  }

  {
    double serial = 0.0, parallel = 0.0;
    const double ts = time_ms(
        [&] { serial = huakit::ref::triangle_suite(5, 20000, huakit::TriangleMetric::hua, 2); });
    const double tp = time_ms(
        [&] { parallel = huakit::triangle_suite(5, 20000, huakit::TriangleMetric::hua, 2); });
    row("triangle 2e4 triples", ts, tp, std::abs(serial - parallel));
  }

  return 0;
}
