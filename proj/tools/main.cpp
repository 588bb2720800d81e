#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "huakit/alpha_perm.hpp"
#include "huakit/hua_kernel.hpp"
#include "huakit/io.hpp"
#include "huakit/metric.hpp"
#include "huakit/parallel.hpp"
#include "huakit/types.hpp"
#include "huakit/verify.hpp"

namespace {

using huakit::Complex;
using huakit::Json;

struct OutputOpts {
  std::string format = "json";
  std::string output;
};

using Clock = std::chrono::steady_clock;

huakit::Complex parse_complex(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return Complex(v, 0.0);
  } catch (const std::exception&) {
  }
  std::istringstream is(s);
  Complex c;
  if (is >> c) {
    is >> std::ws;
    if (is.eof()) return c;
  }
  throw huakit::validation_error("cannot parse complex number '" + s +
                                 "'; use 1.5 or (1.5,0.5)");
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json report_shell(const std::string& command) {
  Json report;
  report["command"] = command;
  report["version"] = huakit::kVersion;
  return report;
}

int emit(Json& report, const Clock::time_point& start, const OutputOpts& out) {
  report["wall_time_s"] =
      std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start).count();
  const std::string payload = out.format == "csv" ? huakit::report_to_csv(report)
                                                  : report.dump(2) + "\n";
  if (out.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out.output);
    if (!f) throw huakit::validation_error("cannot open for writing: " + out.output);
    f << payload;
    if (!f) throw huakit::validation_error("write failed: " + out.output);
  }
  return 0;
}

Json contraction_list_json(const std::vector<huakit::Contraction>& family) {
  Json arr = Json::array();
  for (const huakit::Contraction& c : family) arr.push_back(huakit::matrix_to_json(c.matrix()));
  return arr;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

int run_perm(const std::string& input, const std::string& alpha_str,
             const std::string& method, const OutputOpts& out) {
  const auto start = Clock::now();
  const huakit::NamedMatrix nm = huakit::read_matrix_file(input);
  const Complex alpha = parse_complex(alpha_str);

  Json report = report_shell("perm");
  report["parameters"] = {{"input", input},
                          {"alpha", complex_json(alpha)},
                          {"method", method},
                          {"workers", huakit::workers()}};
  report["seed"] = nullptr;

  Json results;
  results["n"] = nm.matrix.rows();
  if (!nm.name.empty()) results["name"] = nm.name;
  if (method == "direct" || method == "both") {
    results["value"] = complex_json(huakit::alpha_permanent(nm.matrix, alpha));
  }
  if (method == "immanant" || method == "both") {
    results["value_immanant"] = complex_json(huakit::per_via_immanants(nm.matrix, alpha));
  }
  if (method == "immanant") results["value"] = results["value_immanant"];
  if (method == "both") {
    const Complex d(results["value"][0].get<double>(), results["value"][1].get<double>());
    const Complex v(results["value_immanant"][0].get<double>(),
                    results["value_immanant"][1].get<double>());
    results["residual"] = std::abs(d - v) / (1.0 + std::abs(d));
  }
  report["results"] = std::move(results);
  return emit(report, start, out);
}

int run_kernel(const std::vector<std::string>& inputs, double alpha,
               const std::string& field_name, double tol, const OutputOpts& out) {
  const auto start = Clock::now();
  if (!(tol >= 0.0)) throw huakit::validation_error("kernel: --tol must be >= 0");
  const huakit::Field field =
      field_name == "real" ? huakit::Field::real : huakit::Field::complex;

  std::vector<huakit::Contraction> family;
  for (const std::string& path : inputs) {
    family.push_back(huakit::as_contraction(huakit::read_matrix_file(path).matrix));
  }

  Json report = report_shell("kernel");
  report["parameters"] = {{"inputs", inputs},
                          {"alpha", alpha},
                          {"field", field_name},
                          {"tol", tol},
                          {"workers", huakit::workers()}};
  report["seed"] = nullptr;

  const huakit::HuaBellmanMatrix H = huakit::build_hua_bellman(family, alpha, field);
  const double trace = H.entries.trace().real();
  const huakit::PDReport rep = huakit::pd_check(H, tol * std::abs(trace));

  Json results;
  results["m"] = family.size();
  results["n"] = family.front().dim();
  results["admissible"] =
      huakit::exponent_admissible(alpha, static_cast<int>(family.front().dim()), field);
  results["entries"] = huakit::matrix_to_json(H.entries);
  results["min_eigenvalue"] = rep.min_eigenvalue;
  results["tolerance"] = rep.tolerance;
  results["verdict"] = huakit::to_string(rep.verdict);
  results["fingerprint"] = hex64(rep.fingerprint);
  report["results"] = std::move(results);
  return emit(report, start, out);
}

int run_counterexample(const std::string& mode, const huakit::SearchParams& params,
                       const OutputOpts& out) {
  const auto start = Clock::now();
  Json report = report_shell("counterexample");

  if (mode == "replay") {
    report["parameters"] = {{"mode", mode}, {"workers", huakit::workers()}};
    report["seed"] = nullptr;
    const huakit::CounterexampleRecord rec = huakit::bellman_counterexample_replay();
    const huakit::RMatrix S = huakit::symmetrized_bellman(rec.matrices, rec.alpha);
    Eigen::SelfAdjointEigenSolver<huakit::RMatrix> es(S, Eigen::EigenvaluesOnly);

    Json results;
    results["alpha"] = rec.alpha;
    results["min_eigenvalue"] = rec.min_eigenvalue;
    results["verdict"] = rec.min_eigenvalue < -huakit::kSearchTol
                             ? "indefinite"
                             : "not_indefinite";
    results["symmetrized_min_eigenvalue"] = es.eigenvalues()(0);
    Json ints = Json::array();
    for (const huakit::RMatrix& M : huakit::counterexample_integer_matrices()) {
      ints.push_back(huakit::matrix_to_json(M.cast<Complex>()));
    }
    results["integer_matrices"] = std::move(ints);
    results["matrices"] = contraction_list_json(rec.matrices);
    report["results"] = std::move(results);
    return emit(report, start, out);
  }

  report["parameters"] = {{"mode", mode},          {"m", params.m},
                          {"n", params.n},         {"alpha", params.alpha},
                          {"bound", params.entry_bound}, {"norm", params.target_norm},
                          {"trials", params.trials},     {"seed", params.seed},
                          {"tol", params.tol},           {"workers", huakit::workers()}};
  report["seed"] = params.seed;
  const huakit::SearchResult res = huakit::counterexample_search(params);

  Json results;
  results["trials"] = res.summary.trials;
  results["violations"] = res.summary.violations;
  results["has_data"] = res.summary.has_data;
  if (res.summary.has_data) {
    results["min_lambda"] = res.summary.min_lambda;
    results["median_lambda"] = res.summary.median_lambda;
  }
  Json records = Json::array();
  for (const huakit::CounterexampleRecord& rec : res.records) {
    Json jr;
    jr["trial"] = *rec.trial;
    jr["min_eigenvalue"] = rec.min_eigenvalue;
    jr["matrices"] = contraction_list_json(rec.matrices);
    records.push_back(std::move(jr));
  }
  results["records"] = std::move(records);
  report["results"] = std::move(results);
  return emit(report, start, out);
}

int run_distance(const std::vector<std::string>& inputs, const std::string& metric, double p,
                 const OutputOpts& out) {
  const auto start = Clock::now();
  if (inputs.size() != 2) {
    throw huakit::validation_error("distance: exactly two --input files required");
  }
  const huakit::NamedMatrix a = huakit::read_matrix_file(inputs[0]);
  const huakit::NamedMatrix b = huakit::read_matrix_file(inputs[1]);

  Json report = report_shell("distance");
  report["parameters"] = {{"inputs", inputs},
                          {"metric", metric},
                          {"p", p},
                          {"workers", huakit::workers()}};
  report["seed"] = nullptr;

  huakit::DistanceValue d;
  if (metric == "hua") {
    d = huakit::hua_distance_sq(huakit::as_contraction(a.matrix),
                                huakit::as_contraction(b.matrix));
  } else if (metric == "sdiv") {
    const char* names[] = {"first input", "second input"};
    const huakit::CMatrix* mats[] = {&a.matrix, &b.matrix};
    std::vector<huakit::HermitianMatrix> h;
    for (int i = 0; i < 2; ++i) {
      huakit::HermitianMatrix hm = huakit::as_hermitian(*mats[i]);
      const auto [values, vectors] = huakit::hermitian_eigen(hm);
      if (values(values.size() - 1) <= 0.0) {
        throw huakit::validation_error(std::string("distance: ") + names[i] +
                                       " is not positive definite");
      }
      h.push_back(std::move(hm));
    }
    d = huakit::s_divergence(h[0], h[1]);
  } else {
    d = huakit::delta_p_sq(a.matrix, b.matrix, p);
  }

  Json results;
  results["metric"] = metric;
  if (metric == "deltap") results["p"] = p;
  results["squared"] = d.squared;
  results["value"] = d.value;
  report["results"] = std::move(results);
  return emit(report, start, out);
}

int run_verify_cmd(const std::string& suite, std::uint64_t seed, int count, int order,
                   const OutputOpts& out) {
  const auto start = Clock::now();
  Json report = report_shell("verify");
  report["parameters"] = {{"suite", suite},
                          {"count", count},
                          {"order", order},
                          {"workers", huakit::workers()}};
  report["seed"] = seed;

  const std::vector<huakit::SuiteResult> suites = huakit::run_verify(suite, seed, count, order);
  bool all_passed = true;
  std::string failing;
  Json jsuites = Json::array();
  for (const huakit::SuiteResult& s : suites) {
    all_passed = all_passed && s.passed;
    if (!s.passed) failing += (failing.empty() ? "" : ", ") + s.name;
    Json js;
    js["name"] = s.name;
    js["passed"] = s.passed;
    Json checks = Json::array();
    for (const huakit::CheckResult& c : s.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"passed", c.passed},
                            {"worst", c.worst},
                            {"tolerance", c.tolerance},
                            {"detail", c.detail}});
    }
    js["checks"] = std::move(checks);
    jsuites.push_back(std::move(js));
  }
  Json results;
  results["passed"] = all_passed;
  results["suites"] = std::move(jsuites);
  report["results"] = std::move(results);
  emit(report, start, out);
  if (!all_passed) {
    std::cerr << "verification failed: " << failing << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-permanents, Hua-Bellman kernel matrices and contraction-space "
               "distances; seeded searches and verification suites"};
  app.require_subcommand(1);

  OutputOpts out;
  int workers = 0;
  app.add_option("--format", out.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", out.output, "write the report to a file instead of stdout");
  app.add_option("--workers", workers, "worker threads, 0 = all cores")
      ->check(CLI::Range(0, 1024))
      ->capture_default_str();

  auto* perm = app.add_subcommand("perm", "alpha-permanent of one matrix");
  perm->fallthrough();
  std::string perm_input;
  std::string perm_alpha = "1";
  std::string perm_method = "direct";
  perm->add_option("--input", perm_input, "matrix file")->required();
  perm->add_option("--alpha", perm_alpha, "alpha, real or (re,im)")->capture_default_str();
  perm->add_option("--method", perm_method, "evaluation route")
      ->check(CLI::IsMember({"direct", "immanant", "both"}))
      ->capture_default_str();

  auto* kernel = app.add_subcommand("kernel", "Hua-Bellman kernel matrix over a family");
  kernel->fallthrough();
  std::vector<std::string> kernel_inputs;
  double kernel_alpha = 1.0;
  std::string kernel_field = "complex";
  double kernel_tol = huakit::kPdRelTol;
  kernel->add_option("--input", kernel_inputs, "matrix files (repeatable)")->required();
  kernel->add_option("--alpha", kernel_alpha, "exponent")->capture_default_str();
  kernel->add_option("--field", kernel_field, "base field")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  kernel->add_option("--tol", kernel_tol, "PD tolerance, relative to the trace")
      ->capture_default_str();

  auto* cx = app.add_subcommand("counterexample",
                                "replay the pinned indefinite instance or search for more");
  cx->fallthrough();
  std::string cx_mode;
  huakit::SearchParams params;
  cx->add_option("mode", cx_mode, "replay or search")
      ->required()
      ->check(CLI::IsMember({"replay", "search"}));
  cx->add_option("--m", params.m, "family size")->capture_default_str();
  cx->add_option("--n", params.n, "matrix dimension")->capture_default_str();
  cx->add_option("--alpha", params.alpha, "exponent")->capture_default_str();
  cx->add_option("--bound", params.entry_bound, "integer entries in [-bound, bound]")
      ->capture_default_str();
  cx->add_option("--norm", params.target_norm, "spectral norm after rescaling")
      ->capture_default_str();
  cx->add_option("--trials", params.trials, "number of seeded trials")->capture_default_str();
  cx->add_option("--seed", params.seed, "search seed")->capture_default_str();
  cx->add_option("--tol", params.tol, "record when min eigenvalue < -tol")
      ->capture_default_str();

  auto* dist = app.add_subcommand("distance", "distance between two matrices");
  dist->fallthrough();
  std::vector<std::string> dist_inputs;
  std::string dist_metric = "hua";
  double dist_p = 1.0;
  dist->add_option("--input", dist_inputs, "two matrix files")->required();
  dist->add_option("--metric", dist_metric, "hua, sdiv or deltap")
      ->check(CLI::IsMember({"hua", "sdiv", "deltap"}))
      ->capture_default_str();
  dist->add_option("--p", dist_p, "exponent for deltap, in [0, 2]")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->fallthrough();
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 0;
  int verify_count = 100;
  int verify_order = 12;
  verify->add_option("--suite", verify_suite, "identities, pd, metric, majorization or all")
      ->check(CLI::IsMember({"identities", "pd", "metric", "majorization", "all"}))
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "suite seed")->capture_default_str();
  verify->add_option("--count", verify_count, "samples per check")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  verify->add_option("--order", verify_order, "series truncation order, 8..14")
      ->check(CLI::Range(8, 14))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    huakit::set_workers(workers);
    if (*perm) return run_perm(perm_input, perm_alpha, perm_method, out);
    if (*kernel) return run_kernel(kernel_inputs, kernel_alpha, kernel_field, kernel_tol, out);
    if (*cx) return run_counterexample(cx_mode, params, out);
    if (*dist) return run_distance(dist_inputs, dist_metric, dist_p, out);
    if (*verify) return run_verify_cmd(verify_suite, verify_seed, verify_count, verify_order, out);
  } catch (const huakit::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const huakit::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
