// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

// Randomized comparisons of each gate kernel against the Fock-space oracle.
// Every check draws one random instance from `seed` and returns the max-norm
// deviation between the kernel output and the oracle matrix action.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fermisim/gates.hpp"
#include "fermisim/linalg.hpp"
#include "fermisim/random.hpp"
#include "fock_oracle.hpp"

namespace fermisim::oracle {

struct GateCheck {
  std::string name;
  std::function<double(const FockSpace&, const SectorShape&, std::uint64_t)> run;
};

namespace detail {

inline double uniform(CounterRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

inline Spin random_spin(CounterRng& rng) { return rng.uniform() < 0.5 ? Spin::alpha : Spin::beta; }

inline int random_orbital(CounterRng& rng, int n) {
  return std::min(n - 1, static_cast<int>(rng.uniform() * n));
}

// Distinct orbital pair (p, q) in random order; requires n >= 2.
inline std::pair<int, int> random_pair(CounterRng& rng, int n) {
  const int p = random_orbital(rng, n);
  int q = random_orbital(rng, n - 1);
  if (q >= p) ++q;
  return {p, q};
}

inline RealMatrix random_sym(CounterRng& rng, int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.normal();
  return m;
}

inline RealMatrix random_real(CounterRng& rng, int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
  return m;
}

inline double compare(const FockSpace& fock, const SectorShape& shape, const Sparse& generator,
                      double time, const StateVector& in, const StateVector& out) {
  const Matrix u = expm_dense(fock.restrict(generator, shape), time);
  return max_diff(out, u * to_eigen(in));
}

inline Sparse number_sum(const FockSpace& fock, const RealVector& la, const RealVector& lb) {
  Sparse g(static_cast<Eigen::Index>(fock.dim()), static_cast<Eigen::Index>(fock.dim()));
  for (int p = 0; p < fock.norb(); ++p) {
    g += cplx(la[p]) * fock.number(p, Spin::alpha);
    g += cplx(lb[p]) * fock.number(p, Spin::beta);
  }
  return g;
}

inline Sparse coulomb(const FockSpace& fock, const RealMatrix& jaa, const RealMatrix& jab,
                      const RealMatrix& jbb) {
  const int n = fock.norb();
  Sparse g(static_cast<Eigen::Index>(fock.dim()), static_cast<Eigen::Index>(fock.dim()));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const Sparse na = fock.number(p, Spin::alpha);
      const Sparse nb = fock.number(p, Spin::beta);
      g += cplx(0.5 * jaa(p, q)) * Sparse(na * fock.number(q, Spin::alpha));
      g += cplx(0.5 * jbb(p, q)) * Sparse(nb * fock.number(q, Spin::beta));
      // J^(alpha beta) and its transpose J^(beta alpha) contribute equally.
      g += cplx(jab(p, q)) * Sparse(na * fock.number(q, Spin::beta));
    }
  }
  return g;
}

inline Matrix givens_block(int n, int p, int q, double c, cplx s) {
  Matrix u = Matrix::Identity(n, n);
  u(p, p) = c;
  u(p, q) = s;
  u(q, p) = -std::conj(s);
  u(q, q) = c;
  return u;
}

}  // namespace detail

/// Gate checks runnable on `shape`; gates needing two orbitals are skipped for N = 1.
inline std::vector<GateCheck> gate_checks(int norb) {
  using namespace detail;
  std::vector<GateCheck> out;

  out.push_back({"num_op_sum", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    CounterRng rng(seed, 1);
    const int n = shape.norb;
    NumOpSumGate gate{RealVector(n), RealVector(n), uniform(rng, -2.0, 2.0)};
    for (int p = 0; p < n; ++p) {
      gate.lambda_alpha[p] = rng.normal();
      gate.lambda_beta[p] = rng.normal();
    }
    const auto in = random_state_vector(shape, seed);
    const auto res = apply_num_op_sum_evolution(in, gate);
    return compare(fock, shape, number_sum(fock, gate.lambda_alpha, gate.lambda_beta), gate.time, in, res);
  }});

  out.push_back({"diag_coulomb", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    CounterRng rng(seed, 2);
    const int n = shape.norb;
    DiagCoulombGate gate{random_sym(rng, n), random_real(rng, n), random_sym(rng, n),
                         uniform(rng, -2.0, 2.0)};
    const auto in = random_state_vector(shape, seed);
    const auto res = apply_diag_coulomb_evolution(in, gate);
    return compare(fock, shape, coulomb(fock, gate.j_aa, gate.j_ab, gate.j_bb), gate.time, in, res);
  }});

  out.push_back({"orbital_rotation", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    const Matrix ua = random_unitary(shape.norb, seed * 2 + 1);
    const Matrix ub = random_unitary(shape.norb, seed * 2 + 2);
    const auto in = random_state_vector(shape, seed);
    const auto res = apply_orbital_rotation(in, {ua, ub});
    return max_diff(res, orbital_rotation(fock, ua, ub, shape) * to_eigen(in));
  }});

  out.push_back({"quad_ham", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    CounterRng rng(seed, 3);
    QuadraticHamiltonianGate gate{random_hermitian(shape.norb, seed * 2 + 1),
                                  random_hermitian(shape.norb, seed * 2 + 2), uniform(rng, -2.0, 2.0)};
    const auto in = random_state_vector(shape, seed);
    const auto res = apply_quad_ham_evolution(in, gate);
    const Sparse g = fock.one_body(gate.m_alpha, true, false) + fock.one_body(gate.m_beta, false, true);
    return compare(fock, shape, g, gate.time, in, res);
  }});

  out.push_back({"num_interaction", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    CounterRng rng(seed, 4);
    const int p = random_orbital(rng, shape.norb);
    const Spin s = random_spin(rng);
    const double theta = uniform(rng, -3.0, 3.0);
    auto res = random_state_vector(shape, seed);
    const auto in = res;
    apply_num_interaction_inplace(res, p, s, theta);
    return compare(fock, shape, fock.number(p, s), -theta, in, res);
  }});

  out.push_back({"num_num_interaction", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    CounterRng rng(seed, 5);
    const int p = random_orbital(rng, shape.norb);
    const int q = random_orbital(rng, shape.norb);
    const Spin sigma = random_spin(rng);
    const Spin tau = random_spin(rng);
    const double theta = uniform(rng, -3.0, 3.0);
    auto res = random_state_vector(shape, seed);
    const auto in = res;
    apply_num_num_interaction_inplace(res, p, sigma, q, tau, theta);
    const Sparse g = fock.number(p, sigma) * fock.number(q, tau);
    return compare(fock, shape, g, -theta, in, res);
  }});

  if (norb < 2) return out;

  out.push_back({"givens_rotation", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    CounterRng rng(seed, 6);
    const auto [p, q] = random_pair(rng, shape.norb);
    const double theta = uniform(rng, -1.5, 1.5);
    const double phi = uniform(rng, -3.0, 3.0);
    const GivensRotation rot{std::cos(theta), std::polar(std::sin(theta), phi), p, q, random_spin(rng)};
    const auto in = random_state_vector(shape, seed);
    const auto res = apply_givens_rotation(in, rot);
    const Matrix u = givens_block(shape.norb, p, q, rot.c, rot.s);
    const Matrix id = Matrix::Identity(shape.norb, shape.norb);
    const Matrix full = rot.spin == Spin::alpha ? orbital_rotation(fock, u, id, shape)
                                                : orbital_rotation(fock, id, u, shape);
    return max_diff(res, full * to_eigen(in));
  }});

  out.push_back({"real_givens", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    CounterRng rng(seed, 7);
    const auto [p, q] = random_pair(rng, shape.norb);
    const Spin s = random_spin(rng);
    const double theta = uniform(rng, -3.0, 3.0);
    auto res = random_state_vector(shape, seed);
    const auto in = res;
    apply_real_givens_inplace(res, p, q, s, theta);
    // exp(theta K) = expm_dense(i K, theta) with K = a^dagger_p a_q - a^dagger_q a_p.
    const Sparse k = fock.create(p, s) * fock.annihilate(q, s) - fock.create(q, s) * fock.annihilate(p, s);
    return compare(fock, shape, cplx(0.0, 1.0) * k, theta, in, res);
  }});

  out.push_back({"tunneling", [](const FockSpace& fock, const SectorShape& shape, std::uint64_t seed) {
    CounterRng rng(seed, 8);
    const auto [p, q] = random_pair(rng, shape.norb);
    const Spin s = random_spin(rng);
    const double theta = uniform(rng, -3.0, 3.0);
    auto res = random_state_vector(shape, seed);
    const auto in = res;
    apply_tunneling_interaction_inplace(res, p, q, s, theta);
    const Sparse g = fock.create(p, s) * fock.annihilate(q, s) + fock.create(q, s) * fock.annihilate(p, s);
    return compare(fock, shape, g, -theta, in, res);
  }});

  return out;
}

}  // namespace fermisim::oracle
