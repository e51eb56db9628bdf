// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fermisim/common.hpp"
#include "fermisim/fermion_operator.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim {

/// Dense N^4 tensor h_pqrs, index ((p N + q) N + r) N + s.
class TwoBodyTensor {
 public:
  TwoBodyTensor() = default;
  explicit TwoBodyTensor(int norb)
      : norb_(norb), data_(static_cast<std::size_t>(norb) * norb * norb * norb) {}

  int norb() const { return norb_; }
  std::size_t size() const { return data_.size(); }
  cplx& operator()(int p, int q, int r, int s) { return data_[index(p, q, r, s)]; }
  const cplx& operator()(int p, int q, int r, int s) const { return data_[index(p, q, r, s)]; }
  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  /// Sets the value at (p q | r s) and its seven images under the real 8-fold symmetry.
  void set_symmetric(int p, int q, int r, int s, double value);
  /// Largest deviation from h_pqrs = h_qprs = h_pqsr = h_rspq and from being real.
  double symmetry_error() const;
  double max_imag() const;

 private:
  std::size_t index(int p, int q, int r, int s) const {
    return ((static_cast<std::size_t>(p) * norb_ + q) * norb_ + r) * norb_ + s;
  }
  int norb_ = 0;
  std::vector<cplx> data_;
};

/// H = sum h_pq a^dagger_{p s} a_{q s} + 1/2 sum h_pqrs a^dagger_{p s} a^dagger_{r t} a_{s t} a_{q s} + constant.
struct MolecularHamiltonian {
  Matrix one_body;
  TwoBodyTensor two_body;
  double constant = 0.0;

  int norb() const { return static_cast<int>(one_body.rows()); }
  void validate() const;
  FermionOperator to_fermion_operator() const;
};

/// H = sum h_pq a^dagger a + 1/2 sum_{pq sigma tau} J^(sigma tau)_pq n_{p sigma} n_{q tau} + constant,
/// with J^(beta alpha) = J^(alpha beta)^T.
struct DiagonalCoulombHamiltonian {
  Matrix one_body;
  RealMatrix j_aa;
  RealMatrix j_ab;
  RealMatrix j_bb;
  double constant = 0.0;

  int norb() const { return static_cast<int>(one_body.rows()); }
  void validate() const;
  FermionOperator to_fermion_operator() const;
};

struct DoubleFactorizedTerm {
  RealMatrix j;  ///< real symmetric
  Matrix u;      ///< unitary; column k defines the rotated number operator n^(t)_k
};

/// H = sum h_pq a^dagger a + 1/2 sum_t sum_{pq sigma tau} J^(t)_pq n^(t)_{p sigma} n^(t)_{q tau} + constant.
struct DoubleFactorizedHamiltonian {
  Matrix one_body;
  std::vector<DoubleFactorizedTerm> terms;
  double constant = 0.0;

  int norb() const { return static_cast<int>(one_body.rows()); }
  void validate() const;
};

/// Sum_{pq sigma} h_pq a^dagger_{p sigma} a_{q sigma} |vec>.
StateVector apply_one_body(const Matrix& h, const StateVector& vec);

struct ContractionOptions {
  /// Upper bound on the size of the per-batch (configs x N^2) intermediates.
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

StateVector apply_molecular_hamiltonian(const MolecularHamiltonian& ham, const StateVector& vec,
                                        const ContractionOptions& options = {});
StateVector apply_diagonal_coulomb_hamiltonian(const DiagonalCoulombHamiltonian& ham,
                                               const StateVector& vec);
StateVector apply_double_factorized_hamiltonian(const DoubleFactorizedHamiltonian& ham,
                                                const StateVector& vec);

/// Diagonal of the two-body part as the gates module defines it:
/// d = o_a^T J_aa o_a + 2 o_a^T J_ab o_b + o_b^T J_bb o_b, in flat state-vector order.
std::vector<double> diag_coulomb_energies(const SectorShape& shape, const RealMatrix& j_aa,
                                          const RealMatrix& j_ab, const RealMatrix& j_bb);

/// One (J, U) pair of a factorized two-body tensor together with the eigenvalue it came from.
struct DoubleFactorization {
  std::vector<DoubleFactorizedTerm> terms;
  std::vector<double> eigenvalues;          ///< kept, in descending magnitude
  std::vector<double> dropped_eigenvalues;  ///< nonzero eigenvalues not kept
};

/// h_pqrs ~ sum_t sum_kl U_pk U_qk J_kl U_rl U_sl for a real 8-fold symmetric tensor (U real here).
DoubleFactorization double_factorize(const TwoBodyTensor& two_body, double tol = 1e-10,
                                     std::optional<std::size_t> max_terms = std::nullopt);

/// Reassembles sum_t sum_kl U_pk conj(U_qk) J_kl U_rl conj(U_sl), which also covers complex U.
TwoBodyTensor reconstruct_two_body(const std::vector<DoubleFactorizedTerm>& terms, int norb);

DoubleFactorizedHamiltonian df_from_molecular(const MolecularHamiltonian& ham, double tol = 1e-10,
                                              std::optional<std::size_t> max_terms = std::nullopt);

}  // namespace fermisim
