// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fermisim/gate_count.hpp"
#include "fermisim/linalg.hpp"
#include "fermisim/random.hpp"
#include "fermisim/trotter.hpp"

namespace fermisim {

namespace {

std::uint64_t vector_seed(std::uint64_t seed, int index) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

}  // namespace

std::size_t trotter_gate_count(const DiagonalCoulombHamiltonian& ham, int order, int n_steps) {
  ham.validate();
  const int n = ham.norb();
  CircuitPlan plan{n, {}};
  const DiagCoulombOp coulomb{SparsityMask::of(ham.j_aa), SparsityMask::of(ham.j_ab),
                              SparsityMask::of(ham.j_bb)};
  for (const TrotterFactor& f : trotter_schedule(order, 2, 1.0, n_steps)) {
    if (f.term == 0) {
      const SparsityMask mask = SparsityMask::of(expm_hermitian(ham.one_body, f.time), 1e-12);
      plan.ops.emplace_back(RotationOp{mask, mask});
    } else {
      plan.ops.emplace_back(coulomb);
    }
  }
  return count_two_qubit_gates(plan);
}

std::vector<TrotterErrorRecord> trotter_error_experiment(const DiagonalCoulombHamiltonian& ham,
                                                         const SectorShape& shape,
                                                         const TrotterErrorConfig& config) {
  ham.validate();
  shape.validate();
  if (ham.norb() != shape.norb) throw std::invalid_argument("Hamiltonian and sector sizes differ");
  if (config.n_vectors < 1) throw std::invalid_argument("n_vectors must be at least 1");
  for (int s : config.steps) {
    if (s < 1) throw std::invalid_argument("step counts must be at least 1");
  }
  for (int o : config.orders) {
    if (o < 0) throw std::invalid_argument("orders must be non-negative");
  }

  const LinearOperator h = linear_operator(ham);
  std::vector<StateVector> initial;
  std::vector<StateVector> exact;
  for (int i = 0; i < config.n_vectors; ++i) {
    initial.push_back(random_state_vector(shape, vector_seed(config.seed, i)));
    exact.push_back(exact_evolve(h, initial.back(), config.time, {config.exact_tol}));
  }

  std::vector<TrotterErrorRecord> records;
  for (int order : config.orders) {
    for (int steps : config.steps) records.push_back({order, steps, 0, 0.0, 0.0});
  }
  const auto cells = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, config.workers))
  for (std::int64_t c = 0; c < cells; ++c) {
    TrotterErrorRecord& rec = records[static_cast<std::size_t>(c)];
    std::vector<double> errors;
    for (int i = 0; i < config.n_vectors; ++i) {
      const StateVector approx = simulate_trotter_diag_coulomb(initial[i], ham, config.time,
                                                               rec.n_steps, rec.order);
      errors.push_back(distance(approx, exact[i]));
    }
    double mean = 0.0;
    for (double e : errors) mean += e;
    mean /= static_cast<double>(errors.size());
    double var = 0.0;
    for (double e : errors) var += (e - mean) * (e - mean);
    var /= static_cast<double>(errors.size());
    rec.mean_error = mean;
    rec.std_error = std::sqrt(var);
    rec.gate_count = trotter_gate_count(ham, rec.order, rec.n_steps);
  }
  return records;
}

std::vector<KrylovRecord> krylov_diagonalize(const LinearOperator& hamiltonian,
                                             const StateVector& ref, const EvolutionStep& step,
                                             const KrylovConfig& config) {
  if (config.dim < 1) throw std::invalid_argument("Krylov dimension must be at least 1");
  if (!(config.dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (!(config.threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  if (std::abs(ref.norm() - 1.0) > 1e-8) throw std::invalid_argument("reference must be normalized");

  const int dim = config.dim;
  std::vector<StateVector> basis;
  std::vector<StateVector> h_basis;
  basis.push_back(ref);
  for (int k = 1; k < dim; ++k) basis.push_back(step(basis.back()));
  for (const StateVector& v : basis) h_basis.push_back(hamiltonian(v));

  Matrix hmat(dim, dim);
  Matrix smat(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) {
      hmat(j, k) = vdot(basis[j], h_basis[k]);
      smat(j, k) = vdot(basis[j], basis[k]);
    }
  hmat = 0.5 * (hmat + hmat.adjoint()).eval();
  smat = 0.5 * (smat + smat.adjoint()).eval();

  std::vector<KrylovRecord> out;
  for (int d = 1; d <= dim; ++d) {
    Eigen::SelfAdjointEigenSolver<Matrix> seig(smat.topLeftCorner(d, d));
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (seig.eigenvalues()[i] >= config.threshold) kept.push_back(i);
    }
    if (kept.empty()) {
      throw std::runtime_error("Krylov subspace of dimension " + std::to_string(d) +
                               " is degenerate: every overlap eigenvalue is below the threshold");
    }
    Matrix x(d, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
      x.col(static_cast<Eigen::Index>(c)) =
          seig.eigenvectors().col(kept[c]) / std::sqrt(seig.eigenvalues()[kept[c]]);
    }
    const Matrix projected = x.adjoint() * hmat.topLeftCorner(d, d) * x;
    Eigen::SelfAdjointEigenSolver<Matrix> heig(0.5 * (projected + projected.adjoint()));
    out.push_back({d, heig.eigenvalues()[0], static_cast<int>(kept.size())});
  }
  return out;
}

EvolutionStep exact_step(const LinearOperator& hamiltonian, double dt, double tol) {
  return [hamiltonian, dt, tol](const StateVector& v) {
    return exact_evolve(hamiltonian, v, dt, {tol});
  };
}

double dense_ground_energy(const LinearOperator& hamiltonian, const SectorShape& shape) {
  const std::size_t n = sector_size(shape);
  constexpr std::size_t kMaxDense = 6000;
  if (n > kMaxDense) {
    throw std::invalid_argument("sector of dimension " + std::to_string(n) +
                                " is too large for dense diagonalization");
  }
  const auto [da, db] = sector_dimension(shape);
  Matrix mat(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t col = 0; col < n; ++col) {
    const StateVector image = hamiltonian(StateVector::basis(shape, col / db, col % db));
    for (std::size_t row = 0; row < n; ++row) {
      mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = image[row];
    }
  }
  (void)da;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (mat + mat.adjoint()), Eigen::EigenvaluesOnly);
  return eig.eigenvalues()[0];
}

}  // namespace fermisim
