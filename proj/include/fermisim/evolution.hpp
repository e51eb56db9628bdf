// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "fermisim/hamiltonians.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim {

/// Linear action of an operator on state vectors of one sector.
using LinearOperator = std::function<StateVector(const StateVector&)>;

LinearOperator linear_operator(const MolecularHamiltonian& ham);
LinearOperator linear_operator(const DiagonalCoulombHamiltonian& ham);
LinearOperator linear_operator(const DoubleFactorizedHamiltonian& ham);
LinearOperator linear_operator(const FermionOperator& op);

/// <vec| A |vec>. Throws std::invalid_argument for the zero vector.
cplx expectation(const LinearOperator& op, const StateVector& vec);

struct KrylovOptions {
  /// Target for ||result - exp(-i t H) vec|| / ||vec||.
  double tol = 1e-12;
  /// Lanczos basis size per restart.
  int max_krylov_dim = 64;
  /// Upper bound on the number of substeps (restarts) before giving up.
  int max_restarts = 100000;
};

/// exp(-i time H) vec for Hermitian H by restarted Lanczos with adaptive substeps.
/// Throws std::invalid_argument for a zero vector and ConvergenceError when the
/// substep budget is exhausted.
StateVector exact_evolve(const LinearOperator& hamiltonian, const StateVector& vec, double time,
                         const KrylovOptions& options = {});

}  // namespace fermisim
