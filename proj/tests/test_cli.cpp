#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "huakit/alpha_perm.hpp"
#include "huakit/hua_kernel.hpp"
#include "huakit/io.hpp"
#include "huakit/metric.hpp"
#include "huakit/rng.hpp"

using namespace huakit;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HUAKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json parse_report(const RunResult& r) {
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

// scratch directory for matrix files, one per process
const std::string& scratch_dir() {
  static const std::string dir = [] {
    char tmpl[] = "/tmp/huakit_cli_test_XXXXXX";
    const char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

std::string write_matrix(const std::string& stem, const CMatrix& M,
                         const std::string& name = "") {
  const std::string path = scratch_dir() + "/" + stem + ".json";
  write_matrix_file(path, M, name);
  return path;
}

// the serialized results section, byte for byte
std::string results_bytes(const std::string& payload) {
  const std::size_t lo = payload.find("\"results\"");
  const std::size_t hi = payload.find("\"wall_time_s\"");
  REQUIRE(lo != std::string::npos);
  REQUIRE(hi != std::string::npos);
  REQUIRE(lo < hi);
  return payload.substr(lo, hi - lo);
}

}  // namespace

TEST_CASE("help and argument validation exit codes") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("perm --help").code == 0);
  CHECK(run_cli("").code == 1);                       // a subcommand is required
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("perm").code == 1);                   // --input is required
  CHECK(run_cli("distance --metric nope --input a --input b").code == 1);
  CHECK(run_cli("verify --suite nope").code == 1);
  CHECK(run_cli("verify --count 0").code == 1);
  CHECK(run_cli("verify --order 7").code == 1);
  CHECK(run_cli("--workers 2000 verify").code == 1);  // out of range
}

TEST_CASE("perm reproduces the library value through file and report round-trips") {
  Stream s = substream(601, 0);
  const CMatrix A = sample_gaussian(s, 4);
  const std::string path = write_matrix("perm_a", A, "probe");

  const Json rep = parse_report(run_cli("perm --input " + path + " --alpha 1.5"));
  CHECK(rep["command"] == "perm");
  CHECK(rep["results"]["n"] == 4);
  CHECK(rep["results"]["name"] == "probe");
  const Complex expected = alpha_permanent(A, Complex(1.5, 0.0));
  CHECK(rep["results"]["value"][0].get<double>() == expected.real());
  CHECK(rep["results"]["value"][1].get<double>() == expected.imag());
}

TEST_CASE("perm parses complex alpha and compares methods") {
  Stream s = substream(602, 0);
  const CMatrix A = sample_gaussian(s, 3);
  const std::string path = write_matrix("perm_b", A);

  const Json rep =
      parse_report(run_cli("perm --input " + path + " --alpha '(0.5,1.0)' --method both"));
  const Complex expected = alpha_permanent(A, Complex(0.5, 1.0));
  CHECK(rep["results"]["value"][0].get<double>() == expected.real());
  CHECK(rep["results"]["value"][1].get<double>() == expected.imag());
  CHECK(rep["results"]["residual"].get<double>() <= 1e-9);

  const Json imm =
      parse_report(run_cli("perm --input " + path + " --alpha '(0.5,1.0)' --method immanant"));
  CHECK(imm["results"]["value"] == imm["results"]["value_immanant"]);

  CHECK(run_cli("perm --input " + path + " --alpha bogus").code == 1);
}

TEST_CASE("kernel reports the verdict for a family") {
  Stream s = substream(603, 0);
  std::vector<std::string> paths;
  for (int i = 0; i < 3; ++i) {
    paths.push_back(write_matrix("kern_" + std::to_string(i),
                                 sample_real_contraction(s, 2).matrix()));
  }
  std::string args = "kernel --alpha 0.5 --field real";
  for (const std::string& p : paths) args += " --input " + p;

  const Json rep = parse_report(run_cli(args));
  CHECK(rep["results"]["m"] == 3);
  CHECK(rep["results"]["n"] == 2);
  CHECK(rep["results"]["admissible"] == true);
  CHECK(rep["results"]["verdict"] == "positive_definite");
  CHECK(rep["results"]["min_eigenvalue"].get<double>() > 0.0);
  CHECK(rep["results"]["entries"]["rows"] == 3);

  // complex matrices under the real tag are rejected
  const std::string cpath = write_matrix("kern_c", sample_contraction(s, 2).matrix());
  CHECK(run_cli("kernel --field real --input " + cpath + " --input " + cpath).code == 1);

  // non-contractions are rejected
  const std::string big = write_matrix("kern_big", CMatrix::Identity(2, 2) * Complex(2.0, 0.0));
  CHECK(run_cli("kernel --input " + big).code == 1);
}

TEST_CASE("counterexample replay pins the indefinite instance") {
  const Json rep = parse_report(run_cli("counterexample replay"));
  const Json& res = rep["results"];
  CHECK(res["alpha"] == 0.5);
  CHECK(res["verdict"] == "indefinite");
  CHECK(res["min_eigenvalue"].get<double>() ==
        doctest::Approx(-0.0012065843326795832).epsilon(1e-9));
  CHECK(res["symmetrized_min_eigenvalue"].get<double>() > 0.0);
  REQUIRE(res["integer_matrices"].size() == 6);
  REQUIRE(res["matrices"].size() == 6);
  CHECK(res["integer_matrices"][0]["entries"][0][0][0] == -2.0);

  // replayed contraction families parse back into the library cleanly
  const NamedMatrix m0 = matrix_from_json(res["matrices"][0]);
  CHECK(spectral_norm(m0.matrix) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("counterexample search matches an in-process run exactly") {
  SearchParams p;
  p.trials = 300;
  p.seed = 9;
  const SearchResult mine = counterexample_search(p);

  const Json rep = parse_report(run_cli("counterexample search --trials 300 --seed 9"));
  const Json& res = rep["results"];
  CHECK(res["trials"] == 300);
  CHECK(res["violations"].get<std::uint64_t>() == mine.summary.violations);
  CHECK(res["min_lambda"].get<double>() == mine.summary.min_lambda);
  CHECK(res["median_lambda"].get<double>() == mine.summary.median_lambda);
  REQUIRE(res["records"].size() == mine.records.size());
  for (std::size_t i = 0; i < mine.records.size(); ++i) {
    CHECK(res["records"][i]["trial"].get<std::uint64_t>() == *mine.records[i].trial);
    CHECK(res["records"][i]["min_eigenvalue"].get<double>() ==
          mine.records[i].min_eigenvalue);
  }
  CHECK(rep["seed"] == 9);
}

TEST_CASE("search results section is byte-identical across worker counts") {
  const std::string args = "counterexample search --trials 500 --seed 3";
  const RunResult one = run_cli("--workers 1 " + args);
  const RunResult four = run_cli("--workers 4 " + args);
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  CHECK(results_bytes(one.out) == results_bytes(four.out));
  CHECK(one.out != four.out);  // parameters echo the worker count
}

TEST_CASE("distance agrees with the library for each metric") {
  Stream s = substream(604, 0);
  const Contraction A = sample_contraction(s, 2);
  const Contraction B = sample_contraction(s, 2);
  const std::string pa = write_matrix("dist_a", A.matrix());
  const std::string pb = write_matrix("dist_b", B.matrix());

  const Json hua =
      parse_report(run_cli("distance --input " + pa + " --input " + pb));
  CHECK(hua["results"]["metric"] == "hua");
  CHECK(hua["results"]["squared"].get<double>() == hua_distance_sq(A, B).squared);

  const Json dp = parse_report(
      run_cli("distance --metric deltap --p 0.5 --input " + pa + " --input " + pb));
  CHECK(dp["results"]["p"] == 0.5);
  CHECK(dp["results"]["squared"].get<double>() ==
        delta_p_sq(A.matrix(), B.matrix(), 0.5).squared);

  const HermitianMatrix X = sample_hpd(s, 3);
  const HermitianMatrix Y = sample_hpd(s, 3);
  const std::string px = write_matrix("dist_x", X.matrix());
  const std::string py = write_matrix("dist_y", Y.matrix());
  const Json sd = parse_report(
      run_cli("distance --metric sdiv --input " + px + " --input " + py));
  CHECK(sd["results"]["squared"].get<double>() == s_divergence(X, Y).squared);

  // indefinite input for sdiv is a validation failure
  const std::string pind = write_matrix("dist_ind", -CMatrix::Identity(3, 3));
  CHECK(run_cli("distance --metric sdiv --input " + px + " --input " + pind).code == 1);
  // and one input is not enough
  CHECK(run_cli("distance --input " + pa).code == 1);
}

TEST_CASE("file errors are validation failures") {
  CHECK(run_cli("perm --input " + scratch_dir() + "/absent.json").code == 1);

  const std::string bad = scratch_dir() + "/bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run_cli("perm --input " + bad).code == 1);

  const std::string badshape = scratch_dir() + "/badshape.json";
  std::ofstream(badshape) << "{\"rows\": 2, \"cols\": 2, \"entries\": [[[0,0]]]}";
  CHECK(run_cli("perm --input " + badshape).code == 1);
}

TEST_CASE("verify subcommand emits suite results") {
  const Json rep = parse_report(run_cli("verify --suite majorization --count 50 --seed 1"));
  CHECK(rep["results"]["passed"] == true);
  REQUIRE(rep["results"]["suites"].size() == 1);
  CHECK(rep["results"]["suites"][0]["name"] == "majorization");
  for (const Json& c : rep["results"]["suites"][0]["checks"]) {
    CHECK(c["passed"] == true);
    CHECK(c["worst"].get<double>() <= c["tolerance"].get<double>());
  }
}

TEST_CASE("csv output is a projection of the json report") {
  Stream s = substream(605, 0);
  const std::string path = write_matrix("csv_a", sample_gaussian(s, 2));

  const RunResult csv = run_cli("--format csv perm --input " + path);
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("section,key,value\n", 0) == 0);
  CHECK(csv.out.find("meta,command,\"perm\"") != std::string::npos);
  CHECK(csv.out.find("parameter,alpha[0],1.0") != std::string::npos);
  CHECK(csv.out.find("result,value[0],") != std::string::npos);

  const Json rep = parse_report(run_cli("perm --input " + path));
  const double v = rep["results"]["value"][0].get<double>();
  CHECK(csv.out.find("result,value[0]," + Json(v).dump()) != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
  Stream s = substream(606, 0);
  const std::string path = write_matrix("out_a", sample_gaussian(s, 2));
  const std::string outfile = scratch_dir() + "/report.json";

  const RunResult r = run_cli("--output " + outfile + " perm --input " + path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(outfile);
  REQUIRE(in.good());
  const Json rep = Json::parse(in);
  CHECK(rep["command"] == "perm");
  CHECK(rep["results"].contains("value"));
}
