// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/trotter.hpp"

#include <cmath>
#include <stdexcept>

#include "fermisim/gates.hpp"
#include "fermisim/linalg.hpp"

namespace fermisim {

double suzuki_coefficient(int order) {
  if (order < 2) throw std::invalid_argument("the Suzuki coefficient is defined for order >= 2");
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * order - 1.0)));
}

namespace {

void append_suzuki(std::vector<TrotterFactor>& out, int order, std::size_t terms, double dt) {
  if (order == 0) {
    for (std::size_t j = 0; j < terms; ++j) out.push_back({j, dt});
    return;
  }
  if (order == 1) {
    for (std::size_t j = 0; j < terms; ++j) out.push_back({j, dt / 2});
    for (std::size_t j = terms; j-- > 0;) out.push_back({j, dt / 2});
    return;
  }
  const double u = suzuki_coefficient(order);
  append_suzuki(out, order - 1, terms, u * dt);
  append_suzuki(out, order - 1, terms, u * dt);
  append_suzuki(out, order - 1, terms, (1.0 - 4.0 * u) * dt);
  append_suzuki(out, order - 1, terms, u * dt);
  append_suzuki(out, order - 1, terms, u * dt);
}

}  // namespace

std::vector<TrotterFactor> suzuki_sequence(int order, std::size_t term_count, double dt) {
  if (order < 0) throw std::invalid_argument("Trotter order must be non-negative");
  if (term_count == 0) throw std::invalid_argument("product formula needs at least one term");
  std::vector<TrotterFactor> out;
  append_suzuki(out, order, term_count, dt);
  return out;
}

std::vector<TrotterFactor> merge_adjacent(std::vector<TrotterFactor> factors) {
  std::vector<TrotterFactor> out;
  out.reserve(factors.size());
  for (const TrotterFactor& f : factors) {
    if (!out.empty() && out.back().term == f.term) {
      out.back().time += f.time;
    } else {
      out.push_back(f);
    }
  }
  return out;
}

std::vector<TrotterFactor> trotter_schedule(int order, std::size_t term_count, double time,
                                            int n_steps) {
  if (n_steps < 1) throw std::invalid_argument("n_steps must be at least 1");
  const std::vector<TrotterFactor> step = suzuki_sequence(order, term_count, time / n_steps);
  std::vector<TrotterFactor> all;
  all.reserve(step.size() * static_cast<std::size_t>(n_steps));
  for (int r = 0; r < n_steps; ++r) all.insert(all.end(), step.begin(), step.end());
  return merge_adjacent(std::move(all));
}

StateVector simulate_trotter_diag_coulomb(const StateVector& vec,
                                          const DiagonalCoulombHamiltonian& ham, double time,
                                          int n_steps, int order) {
  ham.validate();
  if (ham.norb() != vec.norb()) throw std::invalid_argument("Hamiltonian and vector sizes differ");
  StateVector out = vec;
  for (const TrotterFactor& f : trotter_schedule(order, 2, time, n_steps)) {
    if (f.term == 0) {
      apply_quad_ham_evolution_inplace(out, {ham.one_body, ham.one_body, f.time});
    } else {
      apply_diag_coulomb_evolution_inplace(out, {ham.j_aa, ham.j_ab, ham.j_bb, f.time});
    }
  }
  if (ham.constant != 0.0) out *= std::exp(cplx(0.0, -ham.constant * time));
  return out;
}

StateVector simulate_trotter_double_factorized(const StateVector& vec,
                                               const DoubleFactorizedHamiltonian& ham, double time,
                                               int n_steps, int order) {
  ham.validate();
  const int n = ham.norb();
  if (n != vec.norb()) throw std::invalid_argument("Hamiltonian and vector sizes differ");
  const Matrix identity = Matrix::Identity(n, n);
  StateVector out = vec;
  // Rotation not yet applied to `out`; consecutive rotations accumulate here.
  Matrix pending = identity;
  const auto flush = [&] {
    if (pending != identity) apply_orbital_rotation_inplace(out, pending, 1e-8);
    pending = identity;
  };
  for (const TrotterFactor& f : trotter_schedule(order, ham.terms.size() + 1, time, n_steps)) {
    if (f.term == 0) {
      pending = expm_hermitian(ham.one_body, f.time) * pending;
      continue;
    }
    const DoubleFactorizedTerm& term = ham.terms[f.term - 1];
    pending = term.u.adjoint() * pending;
    flush();
    apply_diag_coulomb_evolution_inplace(out, DiagCoulombGate::spin_summed(term.j, f.time));
    pending = term.u;
  }
  flush();
  if (ham.constant != 0.0) out *= std::exp(cplx(0.0, -ham.constant * time));
  return out;
}

}  // namespace fermisim
