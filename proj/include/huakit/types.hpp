#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace huakit {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

enum class Field { real, complex };

inline const char* to_string(Field f) { return f == Field::real ? "real" : "complex"; }

/// Base for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input: wrong shape, non-finite entries, out-of-domain parameters.
struct validation_error : error {
  using error::error;
};

/// Input exceeds a configured size cap (factorial-cost guards).
struct capacity_error : validation_error {
  using validation_error::validation_error;
};

/// Computation left its guaranteed regime (branch cuts, failed convergence,
/// violated runtime assertion).
struct numerical_error : error {
  using error::error;
};

}  // namespace huakit
