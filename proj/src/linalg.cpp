// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "fermisim/random.hpp"

namespace fermisim {

double unitarity_error(const Matrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("matrix is not square");
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& u, double tol) {
  return u.rows() == u.cols() && (u.rows() == 0 || unitarity_error(u) <= tol);
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && (m.rows() == 0 || (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol);
}

bool is_symmetric(const RealMatrix& m, double tol) {
  return m.rows() == m.cols() &&
         (m.rows() == 0 || (m - m.transpose()).cwiseAbs().maxCoeff() <= tol);
}

Matrix expm_hermitian(const Matrix& m, double t) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m.rows() == 0) return m;
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
  const Vector phases =
      eig.eigenvalues().unaryExpr([t](double e) { return std::exp(cplx(0.0, -e * t)); });
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

namespace {

Matrix gaussian_matrix(int n, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  Matrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = rng.normal();
      z(i, j) = cplx(re, rng.normal());
    }
  }
  return z;
}

}  // namespace

Matrix random_unitary(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  if (n == 0) return Matrix(0, 0);
  const Matrix z = gaussian_matrix(n, seed) / std::sqrt(2.0);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase of each column so the distribution is Haar.
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

Matrix random_hermitian(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  const Matrix z = gaussian_matrix(n, seed);
  return 0.5 * (z + z.adjoint());
}

RealMatrix random_real_symmetric(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  const RealMatrix z = gaussian_matrix(n, seed).real();
  return 0.5 * (z + z.transpose());
}

}  // namespace fermisim
