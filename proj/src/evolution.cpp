// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fermisim {

LinearOperator linear_operator(const MolecularHamiltonian& ham) {
  ham.validate();
  return [ham](const StateVector& v) { return apply_molecular_hamiltonian(ham, v); };
}

LinearOperator linear_operator(const DiagonalCoulombHamiltonian& ham) {
  ham.validate();
  return [ham](const StateVector& v) { return apply_diagonal_coulomb_hamiltonian(ham, v); };
}

LinearOperator linear_operator(const DoubleFactorizedHamiltonian& ham) {
  ham.validate();
  return [ham](const StateVector& v) { return apply_double_factorized_hamiltonian(ham, v); };
}

LinearOperator linear_operator(const FermionOperator& op) {
  return [op](const StateVector& v) { return apply_fermion_operator(op, v); };
}

cplx expectation(const LinearOperator& op, const StateVector& vec) {
  if (vec.norm() == 0.0) throw std::invalid_argument("expectation value of the zero vector");
  return vdot(vec, op(vec));
}

namespace {

// Lanczos basis with full reorthogonalization. `beta.back()` is the coupling
// to the first discarded vector, or zero after a happy breakdown.
struct LanczosBasis {
  std::vector<StateVector> vectors;
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[j] couples vectors j and j + 1
  bool invariant = false;
};

void orthogonalize(StateVector& w, const std::vector<StateVector>& basis) {
  // Classical Gram-Schmidt, applied twice.
  for (int pass = 0; pass < 2; ++pass) {
    for (const StateVector& v : basis) {
      const cplx overlap = vdot(v, w);
      cplx* wd = w.data();
      const cplx* vd = v.data();
      for (std::size_t i = 0; i < w.size(); ++i) wd[i] -= overlap * vd[i];
    }
  }
}

LanczosBasis lanczos(const LinearOperator& h, const StateVector& start, double start_norm,
                     int max_dim) {
  LanczosBasis out;
  StateVector v = start;
  v *= 1.0 / start_norm;
  const int cap = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(max_dim), start.size()));
  double scale = 0.0;
  for (int j = 0; j < cap; ++j) {
    StateVector w = h(v);
    if (w.size() != v.size()) throw std::invalid_argument("operator changed the vector length");
    const double a = vdot(v, w).real();
    out.vectors.push_back(std::move(v));
    out.alpha.push_back(a);
    orthogonalize(w, out.vectors);
    const double b = w.norm();
    scale = std::max({scale, std::abs(a), out.beta.empty() ? 0.0 : out.beta.back()});
    if (b <= 1e-14 * std::max(scale, 1.0) || j + 1 == static_cast<int>(start.size())) {
      out.beta.push_back(0.0);
      out.invariant = true;
      return out;
    }
    out.beta.push_back(b);
    w *= 1.0 / b;
    v = std::move(w);
  }
  return out;
}

}  // namespace

StateVector exact_evolve(const LinearOperator& hamiltonian, const StateVector& vec, double time,
                         const KrylovOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (options.max_krylov_dim < 1) throw std::invalid_argument("Krylov dimension must be positive");
  const double norm0 = vec.norm();
  if (norm0 == 0.0) throw std::invalid_argument("cannot evolve the zero vector");
  if (time == 0.0) return vec;

  const double total = std::abs(time);
  const double direction = time > 0 ? 1.0 : -1.0;
  StateVector current = vec;
  double elapsed = 0.0;
  double step = total;
  int substeps = 0;

  while (elapsed < total) {
    if (++substeps > options.max_restarts) {
      throw ConvergenceError("Krylov evolution did not converge within " +
                             std::to_string(options.max_restarts) + " substeps");
    }
    const double beta0 = current.norm();
    const LanczosBasis basis = lanczos(hamiltonian, current, beta0, options.max_krylov_dim);
    const int m = static_cast<int>(basis.alpha.size());
    RealMatrix tri = RealMatrix::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      tri(j, j) = basis.alpha[j];
      if (j + 1 < m) tri(j, j + 1) = tri(j + 1, j) = basis.beta[j];
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(tri);
    const RealMatrix& q = eig.eigenvectors();
    const RealVector& lambda = eig.eigenvalues();
    const double residual_coupling = basis.beta.back();

    const double remaining = total - elapsed;
    step = basis.invariant ? remaining : std::min(step, remaining);
    Vector y(m);
    for (;;) {
      const double signed_step = direction * step;
      Vector phase(m);
      for (int k = 0; k < m; ++k) phase[k] = std::exp(cplx(0.0, -signed_step * lambda[k])) * q(0, k);
      y = q.cast<cplx>() * phase;
      const double err = beta0 * residual_coupling * std::abs(y[m - 1]);
      // y[m - 1] cannot be resolved below a few ulps of the eigenvector sum.
      const double noise = 16.0 * std::numeric_limits<double>::epsilon() * beta0 * residual_coupling;
      if (basis.invariant || err <= std::max(options.tol * norm0 * step / total, noise)) break;
      step *= 0.5;
      if (step < total * 1e-15) {
        throw ConvergenceError("Krylov step size underflow");
      }
    }

    StateVector next(current.shape());
    for (int j = 0; j < m; ++j) {
      const cplx c = beta0 * y[j];
      const cplx* src = basis.vectors[j].data();
      cplx* dst = next.data();
      for (std::size_t i = 0; i < next.size(); ++i) dst[i] += c * src[i];
    }
    current = std::move(next);
    elapsed = (remaining - step <= 0.0) ? total : elapsed + step;
    step *= 2.0;
  }
  return current;
}

}  // namespace fermisim
