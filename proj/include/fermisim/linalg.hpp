// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "fermisim/common.hpp"

namespace fermisim {

double unitarity_error(const Matrix& u);
bool is_unitary(const Matrix& u, double tol = kMatrixTol);
bool is_hermitian(const Matrix& m, double tol = kMatrixTol);
bool is_symmetric(const RealMatrix& m, double tol);

/// exp(-i t M) for Hermitian M via eigendecomposition.
Matrix expm_hermitian(const Matrix& m, double t);

/// Haar-random unitary from the QR decomposition of a complex Gaussian matrix.
Matrix random_unitary(int n, std::uint64_t seed);
Matrix random_hermitian(int n, std::uint64_t seed);
RealMatrix random_real_symmetric(int n, std::uint64_t seed);

}  // namespace fermisim
