// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fermisim/kernels.hpp"
#include "fermisim/linalg.hpp"

namespace fermisim {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kGivensNormTol = 1e-12;

kernels::AmplitudeMatrix as_matrix(StateVector& vec) {
  return {vec.data(), vec.dim_alpha(), vec.dim_beta()};
}

void check_square(const auto& m, int n, const char* name) {
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument(std::string(name) + " must be " + std::to_string(n) + "x" +
                                std::to_string(n) + ", got " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
}

// exp(-i t sum_{p in I} lambda_p) for every string I of the space.
std::vector<cplx> string_phases(const StringSpace& space, const RealVector& lambda, double t) {
  std::vector<cplx> out(space.size());
  for (std::size_t a = 0; a < space.size(); ++a) {
    double total = 0.0;
    for (StringMask m = space[a]; m; m &= m - 1) total += lambda[std::countr_zero(m)];
    out[a] = std::exp(cplx(0.0, -t * total));
  }
  return out;
}

// prod_{p in I} phases_p for every string I.
std::vector<cplx> string_products(const StringSpace& space, const Vector& phases) {
  std::vector<cplx> out(space.size());
  for (std::size_t a = 0; a < space.size(); ++a) {
    cplx prod = 1.0;
    for (StringMask m = space[a]; m; m &= m - 1) prod *= phases[std::countr_zero(m)];
    out[a] = prod;
  }
  return out;
}

double quadratic_form(StringMask occ, const RealMatrix& j) {
  double total = 0.0;
  for (StringMask m = occ; m; m &= m - 1) {
    const int p = std::countr_zero(m);
    for (StringMask n = occ; n; n &= n - 1) total += j(p, std::countr_zero(n));
  }
  return total;
}

void check_givens(const GivensRotation& rot, int norb) {
  if (rot.p == rot.q) throw std::invalid_argument("Givens rotation needs p != q");
  if (rot.p < 0 || rot.q < 0 || rot.p >= norb || rot.q >= norb) {
    throw std::invalid_argument("Givens rotation orbital out of range");
  }
  if (std::abs(rot.c * rot.c + std::norm(rot.s) - 1.0) > kGivensNormTol) {
    throw std::invalid_argument("Givens rotation requires c^2 + |s|^2 = 1");
  }
}

void rotate(StateVector& vec, const StringSpace& space, const GivensRotation& rot) {
  const auto pairs = string_pairs(space, rot.p, rot.q);
  if (rot.spin == Spin::alpha) {
    kernels::parallel::rotate_row_pairs(as_matrix(vec), pairs, rot.c, rot.s);
  } else {
    kernels::parallel::rotate_column_pairs(as_matrix(vec), pairs, rot.c, rot.s);
  }
}

void check_unitary(const Matrix& u, int norb, double tol, const char* name) {
  check_square(u, norb, name);
  const double err = unitarity_error(u);
  if (!(err <= tol)) {
    throw std::invalid_argument(std::string(name) + " is not unitary (error " +
                                std::to_string(err) + ")");
  }
}

void apply_decomposition(StateVector& vec, const GivensDecomposition& dec, Spin spin) {
  const StringSpace space(vec.norb(), vec.shape().nocc(spin == Spin::beta));
  for (GivensRotation rot : dec.rotations) {
    if (rot.is_identity()) continue;
    rot.spin = spin;
    rotate(vec, space, rot);
  }
  const auto phases = string_products(space, dec.phases);
  if (spin == Spin::alpha) {
    const std::vector<cplx> ones(vec.dim_beta(), cplx(1.0));
    kernels::parallel::scale_outer(as_matrix(vec), phases, ones);
  } else {
    const std::vector<cplx> ones(vec.dim_alpha(), cplx(1.0));
    kernels::parallel::scale_outer(as_matrix(vec), ones, phases);
  }
}

}  // namespace

DiagCoulombGate DiagCoulombGate::spin_summed(const RealMatrix& j, double time) {
  return {j, j, j, time};
}

GivensDecomposition givens_decompose(const Matrix& u, double tol) {
  const int n = static_cast<int>(u.rows());
  check_unitary(u, n, tol, "orbital rotation");
  Matrix w = u;
  GivensDecomposition out;
  out.rotations.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  // Right-multiplying by G^dagger zeros row i left of the diagonal, one
  // adjacent column pair at a time; rows below i are already reduced.
  for (int i = n - 1; i >= 1; --i) {
    for (int j = 0; j < i; ++j) {
      const cplx uj = w(i, j);
      const cplx uk = w(i, j + 1);
      const double aj = std::abs(uj);
      const double ak = std::abs(uk);
      GivensRotation rot;
      rot.p = j;
      rot.q = j + 1;
      if (aj == 0.0) {
        rot.c = 1.0;
        rot.s = 0.0;
      } else if (ak == 0.0) {
        rot.c = 0.0;
        rot.s = 1.0;
      } else {
        const double r = std::hypot(aj, ak);
        rot.c = ak / r;
        rot.s = -std::conj(uj) * uk / (ak * r);
      }
      if (!rot.is_identity()) {
        const cplx sc = std::conj(rot.s);
        for (int row = 0; row < n; ++row) {
          const cplx a = w(row, j);
          const cplx b = w(row, j + 1);
          w(row, j) = a * rot.c + b * sc;
          w(row, j + 1) = -a * rot.s + b * rot.c;
        }
      }
      out.rotations.push_back(rot);
    }
  }
  // u G_1^dagger ... G_M^dagger = D, hence u = D G_M ... G_1 with G_1 applied first.
  out.phases = w.diagonal();
  return out;
}

Matrix givens_matrix(const GivensRotation& rot, int n) {
  if (rot.p == rot.q || rot.p < 0 || rot.q < 0 || rot.p >= n || rot.q >= n) {
    throw std::invalid_argument("Givens rotation orbital out of range");
  }
  Matrix g = Matrix::Identity(n, n);
  g(rot.p, rot.p) = rot.c;
  g(rot.p, rot.q) = rot.s;
  g(rot.q, rot.p) = -std::conj(rot.s);
  g(rot.q, rot.q) = rot.c;
  return g;
}

void apply_num_op_sum_evolution_inplace(StateVector& vec, const NumOpSumGate& gate) {
  const int n = vec.norb();
  if (gate.lambda_alpha.size() != n || gate.lambda_beta.size() != n) {
    throw std::invalid_argument("number operator coefficients must have length " +
                                std::to_string(n));
  }
  const StringSpace alpha(n, vec.shape().nalpha);
  const StringSpace beta(n, vec.shape().nbeta);
  kernels::parallel::scale_outer(as_matrix(vec), string_phases(alpha, gate.lambda_alpha, gate.time),
                                 string_phases(beta, gate.lambda_beta, gate.time));
}

StateVector apply_num_op_sum_evolution(const StateVector& vec, const NumOpSumGate& gate) {
  StateVector out = vec;
  apply_num_op_sum_evolution_inplace(out, gate);
  return out;
}

void apply_diag_coulomb_evolution_inplace(StateVector& vec, const DiagCoulombGate& gate) {
  const int n = vec.norb();
  check_square(gate.j_aa, n, "j_aa");
  check_square(gate.j_ab, n, "j_ab");
  check_square(gate.j_bb, n, "j_bb");
  if (!is_symmetric(gate.j_aa, kSymmetryTol) || !is_symmetric(gate.j_bb, kSymmetryTol)) {
    throw std::invalid_argument("j_aa and j_bb must be symmetric");
  }
  const double t = gate.time;
  const StringSpace alpha(n, vec.shape().nalpha);
  const StringSpace beta(n, vec.shape().nbeta);

  std::vector<cplx> row_phase(alpha.size());
  std::vector<cplx> cross(alpha.size() * static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    row_phase[a] = std::exp(cplx(0.0, -0.5 * t * quadratic_form(alpha[a], gate.j_aa)));
    for (int q = 0; q < n; ++q) {
      double total = 0.0;
      for (StringMask m = alpha[a]; m; m &= m - 1) total += gate.j_ab(std::countr_zero(m), q);
      cross[a * n + q] = std::exp(cplx(0.0, -t * total));
    }
  }
  std::vector<cplx> col_phase(beta.size());
  for (std::size_t b = 0; b < beta.size(); ++b) {
    col_phase[b] = std::exp(cplx(0.0, -0.5 * t * quadratic_form(beta[b], gate.j_bb)));
  }
  kernels::parallel::scale_diag_coulomb(as_matrix(vec), row_phase, col_phase, cross, n,
                                        beta.occupied_lists(), vec.shape().nbeta);
}

StateVector apply_diag_coulomb_evolution(const StateVector& vec, const DiagCoulombGate& gate) {
  StateVector out = vec;
  apply_diag_coulomb_evolution_inplace(out, gate);
  return out;
}

void apply_givens_rotation_inplace(StateVector& vec, const GivensRotation& rot) {
  check_givens(rot, vec.norb());
  if (rot.is_identity()) return;
  const StringSpace space(vec.norb(), vec.shape().nocc(rot.spin == Spin::beta));
  rotate(vec, space, rot);
}

StateVector apply_givens_rotation(const StateVector& vec, const GivensRotation& rot) {
  StateVector out = vec;
  apply_givens_rotation_inplace(out, rot);
  return out;
}

void apply_orbital_rotation_inplace(StateVector& vec, const OrbitalRotationSpec& spec, double tol) {
  const int n = vec.norb();
  check_unitary(spec.u_alpha, n, tol, "u_alpha");
  check_unitary(spec.u_beta, n, tol, "u_beta");
  const GivensDecomposition dec_alpha = givens_decompose(spec.u_alpha, tol);
  apply_decomposition(vec, dec_alpha, Spin::alpha);
  if (spec.u_beta == spec.u_alpha) {
    apply_decomposition(vec, dec_alpha, Spin::beta);
  } else {
    apply_decomposition(vec, givens_decompose(spec.u_beta, tol), Spin::beta);
  }
}

void apply_orbital_rotation_inplace(StateVector& vec, const Matrix& u, double tol) {
  apply_orbital_rotation_inplace(vec, OrbitalRotationSpec::spin_independent(u), tol);
}

StateVector apply_orbital_rotation(const StateVector& vec, const OrbitalRotationSpec& spec,
                                   double tol) {
  StateVector out = vec;
  apply_orbital_rotation_inplace(out, spec, tol);
  return out;
}

void apply_quad_ham_evolution_inplace(StateVector& vec, const QuadraticHamiltonianGate& gate,
                                      double tol) {
  const int n = vec.norb();
  check_square(gate.m_alpha, n, "m_alpha");
  check_square(gate.m_beta, n, "m_beta");
  if (!is_hermitian(gate.m_alpha, tol) || !is_hermitian(gate.m_beta, tol)) {
    throw std::invalid_argument("quadratic Hamiltonian matrices must be Hermitian");
  }
  // The exponential is unitary only to rounding; relax the check accordingly.
  const double utol = std::max(tol, 1e-10);
  OrbitalRotationSpec spec;
  spec.u_alpha = expm_hermitian(gate.m_alpha, gate.time);
  spec.u_beta = gate.m_beta == gate.m_alpha ? spec.u_alpha : expm_hermitian(gate.m_beta, gate.time);
  apply_orbital_rotation_inplace(vec, spec, utol);
}

StateVector apply_quad_ham_evolution(const StateVector& vec, const QuadraticHamiltonianGate& gate,
                                     double tol) {
  StateVector out = vec;
  apply_quad_ham_evolution_inplace(out, gate, tol);
  return out;
}

void apply_num_interaction_inplace(StateVector& vec, int p, Spin spin, double theta) {
  const int n = vec.norb();
  if (p < 0 || p >= n) throw std::invalid_argument("orbital out of range");
  NumOpSumGate gate{RealVector::Zero(n), RealVector::Zero(n), 1.0};
  (spin == Spin::alpha ? gate.lambda_alpha : gate.lambda_beta)[p] = -theta;
  apply_num_op_sum_evolution_inplace(vec, gate);
}

void apply_num_num_interaction_inplace(StateVector& vec, int p, Spin sigma, int q, Spin tau,
                                       double theta) {
  const int n = vec.norb();
  if (p < 0 || q < 0 || p >= n || q >= n) throw std::invalid_argument("orbital out of range");
  DiagCoulombGate gate{RealMatrix::Zero(n, n), RealMatrix::Zero(n, n), RealMatrix::Zero(n, n),
                       1.0};
  if (sigma == tau) {
    RealMatrix& j = sigma == Spin::alpha ? gate.j_aa : gate.j_bb;
    if (p == q) {
      j(p, p) = -2.0 * theta;
    } else {
      j(p, q) = -theta;
      j(q, p) = -theta;
    }
  } else if (sigma == Spin::alpha) {
    gate.j_ab(p, q) = -theta;
  } else {
    gate.j_ab(q, p) = -theta;
  }
  apply_diag_coulomb_evolution_inplace(vec, gate);
}

void apply_real_givens_inplace(StateVector& vec, int p, int q, Spin spin, double theta) {
  apply_givens_rotation_inplace(vec, {std::cos(theta), std::sin(theta), p, q, spin});
}

void apply_tunneling_interaction_inplace(StateVector& vec, int p, int q, Spin spin, double theta) {
  apply_givens_rotation_inplace(vec, {std::cos(theta), cplx(0.0, std::sin(theta)), p, q, spin});
}

}  // namespace fermisim
