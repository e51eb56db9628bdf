// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fermisim/common.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim {

/// exp(-i t sum_{p sigma} lambda^(sigma)_p n_{p sigma}).
struct NumOpSumGate {
  RealVector lambda_alpha;
  RealVector lambda_beta;
  double time = 1.0;
};

/// exp(-(i t / 2) sum_{p q sigma tau} J^(sigma tau)_{pq} n_{p sigma} n_{q tau}) with J^(beta alpha) = J^(alpha beta)^T.
struct DiagCoulombGate {
  RealMatrix j_aa;
  RealMatrix j_ab;
  RealMatrix j_bb;
  double time = 1.0;

  /// Same J for every spin combination.
  static DiagCoulombGate spin_summed(const RealMatrix& j, double time);
};

/// Two-orbital rotation with single-particle block [[c, s], [-conj(s), c]] on (p, q).
/// With c = cos(theta), s = exp(i phi) sin(theta) this is
/// exp(theta (exp(i phi) a^dagger_p a_q - h.c.)) on the given spin.
struct GivensRotation {
  double c = 1.0;
  cplx s = 0.0;
  int p = 0;
  int q = 1;
  Spin spin = Spin::alpha;

  bool is_identity() const { return c == 1.0 && s == cplx(0.0); }
};

struct OrbitalRotationSpec {
  Matrix u_alpha;
  Matrix u_beta;

  static OrbitalRotationSpec spin_independent(const Matrix& u) { return {u, u}; }
};

/// exp(-i t sum_{pq sigma} M^(sigma)_{pq} a^dagger_{p sigma} a_{q sigma}).
struct QuadraticHamiltonianGate {
  Matrix m_alpha;
  Matrix m_beta;
  double time = 1.0;
};

/// u = diag(phases) * G_last * ... * G_first, each G acting on an adjacent pair (j, j + 1).
struct GivensDecomposition {
  std::vector<GivensRotation> rotations;
  Vector phases;
};

GivensDecomposition givens_decompose(const Matrix& u, double tol = kMatrixTol);

/// Embeds the rotation's 2x2 block into an n x n identity.
Matrix givens_matrix(const GivensRotation& rot, int n);

// Functional forms return a new vector; the _inplace forms overwrite `vec`.

StateVector apply_num_op_sum_evolution(const StateVector& vec, const NumOpSumGate& gate);
void apply_num_op_sum_evolution_inplace(StateVector& vec, const NumOpSumGate& gate);

StateVector apply_diag_coulomb_evolution(const StateVector& vec, const DiagCoulombGate& gate);
void apply_diag_coulomb_evolution_inplace(StateVector& vec, const DiagCoulombGate& gate);

StateVector apply_givens_rotation(const StateVector& vec, const GivensRotation& rot);
void apply_givens_rotation_inplace(StateVector& vec, const GivensRotation& rot);

StateVector apply_orbital_rotation(const StateVector& vec, const OrbitalRotationSpec& spec,
                                   double tol = kMatrixTol);
void apply_orbital_rotation_inplace(StateVector& vec, const OrbitalRotationSpec& spec,
                                    double tol = kMatrixTol);
/// Spin-independent shorthand.
void apply_orbital_rotation_inplace(StateVector& vec, const Matrix& u, double tol = kMatrixTol);

StateVector apply_quad_ham_evolution(const StateVector& vec, const QuadraticHamiltonianGate& gate,
                                     double tol = kMatrixTol);
void apply_quad_ham_evolution_inplace(StateVector& vec, const QuadraticHamiltonianGate& gate,
                                      double tol = kMatrixTol);

// Named special cases of the gates above.

/// exp(i theta n_{p sigma}).
void apply_num_interaction_inplace(StateVector& vec, int p, Spin spin, double theta);
/// exp(i theta n_{p sigma} n_{q tau}).
void apply_num_num_interaction_inplace(StateVector& vec, int p, Spin sigma, int q, Spin tau,
                                       double theta);
/// exp(theta (a^dagger_p a_q - a^dagger_q a_p)).
void apply_real_givens_inplace(StateVector& vec, int p, int q, Spin spin, double theta);
/// exp(i theta (a^dagger_p a_q + a^dagger_q a_p)).
void apply_tunneling_interaction_inplace(StateVector& vec, int p, int q, Spin spin, double theta);

}  // namespace fermisim
