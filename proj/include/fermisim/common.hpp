// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fermisim {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class Spin : std::uint8_t { alpha = 0, beta = 1 };

inline const char* to_string(Spin spin) { return spin == Spin::alpha ? "alpha" : "beta"; }

/// Default max-norm tolerance for unitarity and Hermiticity checks.
inline constexpr double kMatrixTol = 1e-10;

/// Thrown when a computation that should converge does not (Krylov restarts).
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure in a text input, carrying the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace fermisim
