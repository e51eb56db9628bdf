// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/hamiltonians.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fermisim/gates.hpp"
#include "fermisim/kernels.hpp"
#include "fermisim/linalg.hpp"

namespace fermisim {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kSymmetryTol = 1e-12;

void check_square(const auto& m, int n, const std::string& name) {
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument(name + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

void require_norb(int ham_norb, const StateVector& vec) {
  if (ham_norb != vec.norb()) {
    throw std::invalid_argument("Hamiltonian has " + std::to_string(ham_norb) +
                                " orbitals but the state vector has " +
                                std::to_string(vec.norb()));
  }
}

using RowMajorMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

void TwoBodyTensor::set_symmetric(int p, int q, int r, int s, double value) {
  for (const auto& [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s},
                                   std::array{p, q, s, r}, std::array{q, p, s, r},
                                   std::array{r, s, p, q}, std::array{s, r, p, q},
                                   std::array{r, s, q, p}, std::array{s, r, q, p}}) {
    (*this)(a, b, c, d) = value;
  }
}

double TwoBodyTensor::symmetry_error() const {
  const int n = norb_;
  double err = max_imag();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const cplx v = (*this)(p, q, r, s);
          err = std::max({err, std::abs(v - (*this)(q, p, r, s)), std::abs(v - (*this)(p, q, s, r)),
                          std::abs(v - (*this)(r, s, p, q))});
        }
  return err;
}

double TwoBodyTensor::max_imag() const {
  double out = 0.0;
  for (const cplx& v : data_) out = std::max(out, std::abs(v.imag()));
  return out;
}

void MolecularHamiltonian::validate() const {
  const int n = norb();
  check_square(one_body, n, "one_body");
  if (!is_hermitian(one_body, kHermitianTol)) throw std::invalid_argument("one_body is not Hermitian");
  if (two_body.norb() != n) throw std::invalid_argument("two_body dimension does not match one_body");
  // Hermiticity of the two-body operator: h_pqrs = conj(h_qpsr).
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (std::abs(two_body(p, q, r, s) - std::conj(two_body(q, p, s, r))) > kHermitianTol) {
            throw std::invalid_argument("two_body does not define a Hermitian operator");
          }
        }
}

FermionOperator MolecularHamiltonian::to_fermion_operator() const {
  const int n = norb();
  FermionOperator op;
  if (constant != 0.0) op.add({}, constant);
  for (Spin sigma : {Spin::alpha, Spin::beta}) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (one_body(p, q) != cplx(0.0)) op.add({cre(p, sigma), des(q, sigma)}, one_body(p, q));
      }
  }
  for (Spin sigma : {Spin::alpha, Spin::beta})
    for (Spin tau : {Spin::alpha, Spin::beta})
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) {
              const cplx v = two_body(p, q, r, s);
              if (v == cplx(0.0)) continue;
              op.add({cre(p, sigma), cre(r, tau), des(s, tau), des(q, sigma)}, 0.5 * v);
            }
  return op;
}

void DiagonalCoulombHamiltonian::validate() const {
  const int n = norb();
  check_square(one_body, n, "one_body");
  check_square(j_aa, n, "j_aa");
  check_square(j_ab, n, "j_ab");
  check_square(j_bb, n, "j_bb");
  if (!is_hermitian(one_body, kHermitianTol)) throw std::invalid_argument("one_body is not Hermitian");
  if (!is_symmetric(j_aa, kSymmetryTol) || !is_symmetric(j_bb, kSymmetryTol)) {
    throw std::invalid_argument("j_aa and j_bb must be symmetric");
  }
}

FermionOperator DiagonalCoulombHamiltonian::to_fermion_operator() const {
  const int n = norb();
  FermionOperator op;
  if (constant != 0.0) op.add({}, constant);
  for (Spin sigma : {Spin::alpha, Spin::beta})
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (one_body(p, q) != cplx(0.0)) op.add({cre(p, sigma), des(q, sigma)}, one_body(p, q));
      }
  const auto add_nn = [&](int p, Spin sp, int q, Spin sq, double value) {
    if (value != 0.0) op.add({cre(p, sp), des(p, sp), cre(q, sq), des(q, sq)}, 0.5 * value);
  };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      add_nn(p, Spin::alpha, q, Spin::alpha, j_aa(p, q));
      add_nn(p, Spin::alpha, q, Spin::beta, j_ab(p, q));
      add_nn(p, Spin::beta, q, Spin::alpha, j_ab(q, p));
      add_nn(p, Spin::beta, q, Spin::beta, j_bb(p, q));
    }
  return op;
}

void DoubleFactorizedHamiltonian::validate() const {
  const int n = norb();
  check_square(one_body, n, "one_body");
  if (!is_hermitian(one_body, kHermitianTol)) throw std::invalid_argument("one_body is not Hermitian");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string name = "term " + std::to_string(t);
    check_square(terms[t].j, n, name + " J");
    check_square(terms[t].u, n, name + " U");
    if (!is_symmetric(terms[t].j, kSymmetryTol)) throw std::invalid_argument(name + " J is not symmetric");
    if (!is_unitary(terms[t].u, kMatrixTol)) throw std::invalid_argument(name + " U is not unitary");
  }
}

StateVector apply_one_body(const Matrix& h, const StateVector& vec) {
  const int n = vec.norb();
  check_square(h, n, "one-body matrix");
  StateVector out(vec.shape());
  const kernels::AmplitudeMatrix dst{out.data(), vec.dim_alpha(), vec.dim_beta()};
  const kernels::ConstAmplitudeMatrix src{vec.data(), vec.dim_alpha(), vec.dim_beta()};
  kernels::parallel::one_body_rows(dst, src, ExcitationTable(n, vec.shape().nalpha), h);
  kernels::parallel::one_body_columns(dst, src, ExcitationTable(n, vec.shape().nbeta), h);
  return out;
}

StateVector apply_molecular_hamiltonian(const MolecularHamiltonian& ham, const StateVector& vec,
                                        const ContractionOptions& options) {
  require_norb(ham.norb(), vec);
  ham.validate();
  const int n = ham.norb();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;

  Matrix shifted = ham.one_body;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) shifted(p, q) -= 0.5 * ham.two_body(p, r, r, q);
  StateVector out = apply_one_body(shifted, vec);
  if (ham.constant != 0.0) out += ham.constant * vec;
  if (n == 0) return out;

  // M(rs, pq) = h_pqrs, so (T M)(c, pq) = sum_rs h_pqrs (E_rs psi)(c).
  Matrix m(n2, n2);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) m(r * n + s, p * n + q) = ham.two_body(p, q, r, s);
  if (m.cwiseAbs().maxCoeff() == 0.0) return out;

  const ExcitationTable alpha_table(n, vec.shape().nalpha);
  const ExcitationTable beta_table(n, vec.shape().nbeta);
  const std::size_t da = vec.dim_alpha();
  const std::size_t db = vec.dim_beta();
  const std::size_t bytes_per_row = 2 * db * n2 * sizeof(cplx);
  const std::size_t batch = std::clamp<std::size_t>(options.memory_budget_bytes / bytes_per_row, 1, da);
  const cplx* psi = vec.data();
  cplx* res = out.data();

  RowMajorMatrix t_mat;
  RowMajorMatrix g_mat;
  for (std::size_t a0 = 0; a0 < da; a0 += batch) {
    const std::size_t a1 = std::min(da, a0 + batch);
    const auto rows = static_cast<std::int64_t>(a1 - a0);
    t_mat.setZero(static_cast<Eigen::Index>((a1 - a0) * db), static_cast<Eigen::Index>(n2));

    // Step 1: T(c, rs) = (E_rs psi)(c) for the configurations c of this batch.
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < rows; ++i) {
      const std::size_t a = a0 + static_cast<std::size_t>(i);
      cplx* block = t_mat.data() + static_cast<std::size_t>(i) * db * n2;
      for (const Excitation& e : alpha_table[a]) {
        const std::size_t col = e.p * n + e.q;
        const cplx* src = psi + static_cast<std::size_t>(e.target) * db;
        const double sign = e.sign;
        for (std::size_t b = 0; b < db; ++b) block[b * n2 + col] += sign * src[b];
      }
      const cplx* row = psi + a * db;
      for (std::size_t b = 0; b < db; ++b) {
        cplx* trow = block + b * n2;
        for (const Excitation& e : beta_table[b]) {
          trow[e.p * n + e.q] += static_cast<double>(e.sign) * row[e.target];
        }
      }
    }

    // Step 2: contract with the two-body tensor.
    g_mat.noalias() = t_mat * m;

    // Step 3a: alpha part scatters from the batch rows; columns are split
    // across threads so no two threads write the same element.
    const auto nchunks = static_cast<std::int64_t>((db + 63) / 64);
#pragma omp parallel for schedule(static)
    for (std::int64_t chunk = 0; chunk < nchunks; ++chunk) {
      const std::size_t b0 = static_cast<std::size_t>(chunk) * 64;
      const std::size_t b1 = std::min(db, b0 + 64);
      for (std::size_t a = a0; a < a1; ++a) {
        const cplx* gblock = g_mat.data() + (a - a0) * db * n2;
        for (const Excitation& e : alpha_table[a]) {
          // <target| a^dagger_q a_p |a> = sign, so this is E_qp.
          const std::size_t col = e.q * n + e.p;
          cplx* dst = res + static_cast<std::size_t>(e.target) * db;
          const double w = 0.5 * e.sign;
          for (std::size_t b = b0; b < b1; ++b) dst[b] += w * gblock[b * n2 + col];
        }
      }
    }

    // Step 3b: beta part gathers within each row.
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < rows; ++i) {
      const std::size_t a = a0 + static_cast<std::size_t>(i);
      const cplx* gblock = g_mat.data() + static_cast<std::size_t>(i) * db * n2;
      cplx* dst = res + a * db;
      for (std::size_t t = 0; t < db; ++t) {
        cplx acc = 0.0;
        for (const Excitation& e : beta_table[t]) {
          acc += static_cast<double>(e.sign) * gblock[static_cast<std::size_t>(e.target) * n2 + e.p * n + e.q];
        }
        dst[t] += 0.5 * acc;
      }
    }
  }
  return out;
}

std::vector<double> diag_coulomb_energies(const SectorShape& shape, const RealMatrix& j_aa,
                                          const RealMatrix& j_ab, const RealMatrix& j_bb) {
  const int n = shape.norb;
  check_square(j_aa, n, "j_aa");
  check_square(j_ab, n, "j_ab");
  check_square(j_bb, n, "j_bb");
  const StringSpace alpha(n, shape.nalpha);
  const StringSpace beta(n, shape.nbeta);
  const auto quad = [](StringMask occ, const RealMatrix& j) {
    double total = 0.0;
    for (StringMask x = occ; x; x &= x - 1)
      for (StringMask y = occ; y; y &= y - 1) total += j(std::countr_zero(x), std::countr_zero(y));
    return total;
  };
  std::vector<double> beta_energy(beta.size());
  for (std::size_t b = 0; b < beta.size(); ++b) beta_energy[b] = quad(beta[b], j_bb);

  std::vector<double> out(alpha.size() * beta.size());
  RealVector cross(n);
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    const double ea = quad(alpha[a], j_aa);
    cross.setZero();
    for (StringMask x = alpha[a]; x; x &= x - 1) cross += j_ab.row(std::countr_zero(x)).transpose();
    for (std::size_t b = 0; b < beta.size(); ++b) {
      double eab = 0.0;
      for (StringMask y = beta[b]; y; y &= y - 1) eab += cross[std::countr_zero(y)];
      out[a * beta.size() + b] = ea + 2.0 * eab + beta_energy[b];
    }
  }
  return out;
}

StateVector apply_diagonal_coulomb_hamiltonian(const DiagonalCoulombHamiltonian& ham,
                                               const StateVector& vec) {
  require_norb(ham.norb(), vec);
  ham.validate();
  StateVector out = apply_one_body(ham.one_body, vec);
  const auto d = diag_coulomb_energies(vec.shape(), ham.j_aa, ham.j_ab, ham.j_bb);
  for (std::size_t i = 0; i < vec.size(); ++i) out[i] += (0.5 * d[i] + ham.constant) * vec[i];
  return out;
}

StateVector apply_double_factorized_hamiltonian(const DoubleFactorizedHamiltonian& ham,
                                                const StateVector& vec) {
  require_norb(ham.norb(), vec);
  ham.validate();
  StateVector out = apply_one_body(ham.one_body, vec);
  if (ham.constant != 0.0) out += ham.constant * vec;
  for (const DoubleFactorizedTerm& term : ham.terms) {
    StateVector tmp = vec;
    apply_orbital_rotation_inplace(tmp, term.u.adjoint().eval());
    const auto d = diag_coulomb_energies(vec.shape(), term.j, term.j, term.j);
    for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] *= 0.5 * d[i];
    apply_orbital_rotation_inplace(tmp, term.u);
    out += tmp;
  }
  return out;
}

}  // namespace fermisim
