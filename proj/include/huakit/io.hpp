#pragma once

#include <string>

#include "json.hpp"

#include "huakit/types.hpp"

namespace huakit {

// Insertion-ordered JSON keeps report fields in a stable, human-sensible order.
using Json = nlohmann::ordered_json;

struct NamedMatrix {
  CMatrix matrix;
  std::string name;  // empty when the file carries none
};

/// {"rows": r, "cols": c, "entries": row-major [re, im] pairs, "name"?: string}.
/// Real matrices serialize with im exactly 0; doubles round-trip exactly.
Json matrix_to_json(const CMatrix& M, const std::string& name = "");

NamedMatrix matrix_from_json(const Json& j);

NamedMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const CMatrix& M,
                       const std::string& name = "");

/// One "section,key,value" line per scalar leaf, arrays indexed as key[i].
/// A projection of the JSON report, never a separate computation.
std::string report_to_csv(const Json& report);

}  // namespace huakit
