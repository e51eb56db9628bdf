// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "fermisim/hamiltonians.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim {

/// One factor exp(-i H_term time) of a product formula. Terms are 0-based.
struct TrotterFactor {
  std::size_t term;
  double time;

  friend bool operator==(const TrotterFactor&, const TrotterFactor&) = default;
};

/// Factors of the order-`order` Suzuki formula S_k(dt) over `term_count` terms,
/// in application order (the first factor acts first). S_0 is the plain
/// sequence 0..L-1, S_1 its palindrome with dt/2, and
/// S_k(t) = S_{k-1}(u t)^2 S_{k-1}((1 - 4u) t) S_{k-1}(u t)^2 with u = 1 / (4 - 4^{1/(2k-1)}).
std::vector<TrotterFactor> suzuki_sequence(int order, std::size_t term_count, double dt);

/// u_k of the Suzuki recursion.
double suzuki_coefficient(int order);

/// Merges adjacent factors acting on the same term (exact: a term commutes with itself).
std::vector<TrotterFactor> merge_adjacent(std::vector<TrotterFactor> factors);

/// Full merged factor list for n_steps repetitions of S_order(time / n_steps).
std::vector<TrotterFactor> trotter_schedule(int order, std::size_t term_count, double time,
                                            int n_steps);

/// Two terms: 0 = one-body (quadratic evolution), 1 = diagonal Coulomb evolution.
StateVector simulate_trotter_diag_coulomb(const StateVector& vec,
                                          const DiagonalCoulombHamiltonian& ham, double time,
                                          int n_steps, int order);

/// Terms: 0 = one-body, then t + 1 = rotated diagonal Coulomb term t. Rotations
/// of consecutive factors are multiplied together before being applied.
StateVector simulate_trotter_double_factorized(const StateVector& vec,
                                               const DoubleFactorizedHamiltonian& ham, double time,
                                               int n_steps, int order);

}  // namespace fermisim
