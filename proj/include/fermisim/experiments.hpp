// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fermisim/evolution.hpp"
#include "fermisim/hamiltonians.hpp"

namespace fermisim {

struct TrotterErrorRecord {
  int order = 0;
  int n_steps = 0;
  std::size_t gate_count = 0;
  double mean_error = 0.0;
  double std_error = 0.0;  ///< population standard deviation over the random vectors
};

struct TrotterErrorConfig {
  double time = 1.0;
  std::vector<int> orders;
  std::vector<int> steps;
  int n_vectors = 5;
  std::uint64_t seed = 0;
  /// Cells evaluated concurrently; results do not depend on it.
  int workers = 1;
  double exact_tol = 1e-12;
};

/// Euclidean distance between Trotterized and exact evolution of random unit
/// vectors, one record per (order, n_steps) in the order given.
std::vector<TrotterErrorRecord> trotter_error_experiment(const DiagonalCoulombHamiltonian& ham,
                                                         const SectorShape& shape,
                                                         const TrotterErrorConfig& config);

/// Gate count of the compiled Trotter circuit for a diagonal Coulomb Hamiltonian.
std::size_t trotter_gate_count(const DiagonalCoulombHamiltonian& ham, int order, int n_steps);

/// One application of the Krylov time-step operator.
using EvolutionStep = std::function<StateVector(const StateVector&)>;

struct KrylovConfig {
  int dim = 10;
  double dt = 0.3;
  /// Overlap eigenvalues below this are discarded.
  double threshold = 1e-10;
};

struct KrylovRecord {
  int dim = 0;
  double energy = 0.0;
  int kept = 0;  ///< overlap eigenvalues retained
};

/// Krylov quantum diagonalization: phi_k = step^k ref, then for every prefix
/// d = 1..D the lowest eigenvalue of the projected generalized problem.
/// Throws std::runtime_error if a prefix has no overlap eigenvalue above threshold.
std::vector<KrylovRecord> krylov_diagonalize(const LinearOperator& hamiltonian,
                                             const StateVector& ref, const EvolutionStep& step,
                                             const KrylovConfig& config);

EvolutionStep exact_step(const LinearOperator& hamiltonian, double dt, double tol = 1e-12);

/// Ground energy by dense diagonalization of the sector matrix (small sectors only).
double dense_ground_energy(const LinearOperator& hamiltonian, const SectorShape& shape);

}  // namespace fermisim
