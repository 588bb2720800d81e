#include "huakit/io.hpp"

#include <fstream>
#include <sstream>

namespace huakit {

Json matrix_to_json(const CMatrix& M, const std::string& name) {
  Json j;
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) {
      row.push_back(Json::array({M(i, k).real(), M(i, k).imag()}));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  if (!name.empty()) j["name"] = name;
  return j;
}

NamedMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw validation_error("matrix json: not an object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw validation_error("matrix json: missing rows, cols or entries");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    throw validation_error("matrix json: rows and cols must be integers");
  }
  const long long rows = j["rows"].get<long long>();
  const long long cols = j["cols"].get<long long>();
  if (rows < 0 || cols < 0 || rows > 4096 || cols > 4096) {
    throw validation_error("matrix json: rows/cols out of range");
  }
  const Json& entries = j["entries"];
  if (!entries.is_array() || static_cast<long long>(entries.size()) != rows) {
    throw validation_error("matrix json: entries must hold one array per row");
  }
  NamedMatrix out;
  out.matrix.resize(rows, cols);
  for (long long i = 0; i < rows; ++i) {
    const Json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != cols) {
      throw validation_error("matrix json: row " + std::to_string(i) + " has wrong length");
    }
    for (long long k = 0; k < cols; ++k) {
      const Json& cell = row[static_cast<std::size_t>(k)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        throw validation_error("matrix json: entry (" + std::to_string(i) + "," +
                               std::to_string(k) + ") must be a [re, im] pair");
      }
      out.matrix(i, k) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw validation_error("matrix json: name must be a string");
    out.name = j["name"].get<std::string>();
  }
  return out;
}

NamedMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open matrix file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error("malformed matrix file " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const CMatrix& M, const std::string& name) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open for writing: " + path);
  out << matrix_to_json(M, name).dump(2) << '\n';
  if (!out) throw validation_error("write failed: " + path);
}

namespace {

void flatten(const Json& node, const std::string& key, const std::string& section,
             std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) {
      flatten(v, key.empty() ? k : key + "." + k, section, out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], key + "[" + std::to_string(i) + "]", section, out);
    }
  } else {
    out << section << ',' << key << ',' << node.dump() << '\n';
  }
}

}  // namespace

std::string report_to_csv(const Json& report) {
  std::ostringstream out;
  out << "section,key,value\n";
  for (const char* key : {"command", "version", "seed", "wall_time_s"}) {
    if (report.contains(key)) flatten(report[key], key, "meta", out);
  }
  if (report.contains("parameters")) flatten(report["parameters"], "", "parameter", out);
  if (report.contains("results")) flatten(report["results"], "", "result", out);
  return out.str();
}

}  // namespace huakit
