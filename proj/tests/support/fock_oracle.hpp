// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference for the library's fermionic conventions. Operators
// are built as sparse Jordan-Wigner matrices on the full Fock space of 2N
// modes from Kronecker products of 2x2 blocks; nothing here uses the
// library's string addressing or excitation tables.
//
// Mode m = p for (p, alpha) and m = N + p for (p, beta). Fock basis index x
// has bit m set when mode m is occupied. a_m carries a Z string on every
// mode above m, so |x> = product of a^dagger_m over occupied m with higher
// modes to the left.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "fermisim/common.hpp"
#include "fermisim/fermion_operator.hpp"
#include "fermisim/hamiltonians.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim::oracle {

using Sparse = Eigen::SparseMatrix<cplx>;

class FockSpace {
 public:
  explicit FockSpace(int norb) : norb_(norb), modes_(2 * norb), dim_(std::size_t{1} << (2 * norb)) {
    for (int m = 0; m < modes_; ++m) {
      ann_.push_back(build_annihilate(m));
      cre_.push_back(Sparse(ann_.back().adjoint()));
    }
  }

  int norb() const { return norb_; }
  std::size_t dim() const { return dim_; }
  int mode(int p, Spin s) const { return s == Spin::alpha ? p : norb_ + p; }

  /// a_m on the full Fock space.
  const Sparse& annihilate(int m) const { return ann_[static_cast<std::size_t>(m)]; }
  const Sparse& annihilate(int p, Spin s) const { return annihilate(mode(p, s)); }
  const Sparse& create(int p, Spin s) const { return cre_[static_cast<std::size_t>(mode(p, s))]; }

  Sparse number(int p, Spin s) const { return create(p, s) * annihilate(p, s); }
  Sparse identity() const {
    Sparse id(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    id.setIdentity();
    return id;
  }

  Sparse primitive(const Primitive& prim) const {
    return prim.action == Action::create ? create(prim.orbital, prim.spin)
                                         : annihilate(prim.orbital, prim.spin);
  }

  Sparse fermion_operator(const FermionOperator& op) const {
    Sparse out(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (const auto& [term, c] : op.terms()) {
      Sparse prod = identity();
      for (const Primitive& prim : term) {
        Sparse next = prod * primitive(prim);
        prod = std::move(next);
      }
      out += c * prod;
    }
    return out;
  }

  /// sum_{pq sigma} m_pq a^dagger_{p sigma} a_{q sigma}, optionally for one spin only.
  Sparse one_body(const Matrix& m, bool alpha = true, bool beta = true) const {
    Sparse out(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (Spin s : {Spin::alpha, Spin::beta}) {
      if ((s == Spin::alpha && !alpha) || (s == Spin::beta && !beta)) continue;
      for (int p = 0; p < norb_; ++p)
        for (int q = 0; q < norb_; ++q) {
          if (m(p, q) != cplx(0.0)) {
            Sparse term = create(p, s) * annihilate(q, s);
            out += m(p, q) * term;
          }
        }
    }
    return out;
  }

  /// Fock indices of a sector in the library's flat order, derived by brute
  /// force: strings sorted by bitmask value, alpha-major.
  std::vector<std::size_t> sector_basis(const SectorShape& shape) const {
    std::vector<std::uint64_t> alpha;
    std::vector<std::uint64_t> beta;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << norb_); ++m) {
      if (std::popcount(m) == shape.nalpha) alpha.push_back(m);
      if (std::popcount(m) == shape.nbeta) beta.push_back(m);
    }
    std::vector<std::size_t> out;
    for (auto a : alpha)
      for (auto b : beta) out.push_back(static_cast<std::size_t>(a | (b << norb_)));
    return out;
  }

  /// Dense block of `op` on a sector.
  Matrix restrict(const Sparse& op, const SectorShape& shape) const {
    const auto basis = sector_basis(shape);
    std::vector<Eigen::Index> position(dim_, -1);
    for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = static_cast<Eigen::Index>(i);
    const auto n = static_cast<Eigen::Index>(basis.size());
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index col = 0; col < op.outerSize(); ++col) {
      for (Sparse::InnerIterator it(op, col); it; ++it) {
        const Eigen::Index i = position[static_cast<std::size_t>(it.row())];
        const Eigen::Index j = position[static_cast<std::size_t>(it.col())];
        if (i >= 0 && j >= 0) out(i, j) = it.value();
      }
    }
    return out;
  }

 private:
  Sparse build_annihilate(int m) const {
    Sparse lower(2, 2);
    lower.insert(0, 1) = 1.0;  // |0><1|
    Sparse z(2, 2);
    z.insert(0, 0) = 1.0;
    z.insert(1, 1) = -1.0;
    Sparse id(2, 2);
    id.setIdentity();
    Sparse out(1, 1);
    out.insert(0, 0) = 1.0;
    // Leftmost Kronecker factor is the most significant bit, i.e. the highest mode.
    for (int k = modes_ - 1; k >= 0; --k) {
      const Sparse& factor = k > m ? z : (k == m ? lower : id);
      Sparse next = Eigen::kroneckerProduct(out, factor);
      out = std::move(next);
    }
    return out;
  }

  int norb_;
  int modes_;
  std::size_t dim_;
  std::vector<Sparse> ann_;
  std::vector<Sparse> cre_;
};

inline Matrix dense(const Sparse& op) { return Matrix(op); }

inline Vector to_eigen(const StateVector& v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

inline double max_diff(const StateVector& v, const Vector& w) {
  double out = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out = std::max(out, std::abs(v[i] - w[static_cast<Eigen::Index>(i)]));
  }
  return out;
}

/// exp(-i t H) for a Hermitian sector matrix.
inline Matrix expm_dense(const Matrix& h, double t) {
  return (cplx(0.0, -t) * h).exp();
}

/// Orbital rotation exp(sum log(U)_pq a^dagger_p a_q) per spin, on a sector.
inline Matrix orbital_rotation(const FockSpace& fock, const Matrix& ua, const Matrix& ub,
                               const SectorShape& shape) {
  const Matrix la = ua.log();
  const Matrix lb = ub.log();
  const Sparse gen = fock.one_body(la, true, false) + fock.one_body(lb, false, true);
  return fock.restrict(gen, shape).exp();
}

/// sum h_pq a^dagger a + 1/2 sum h_pqrs a^dagger_{p s} a^dagger_{r t} a_{s t} a_{q s} + constant.
inline Sparse molecular(const FockSpace& fock, const MolecularHamiltonian& ham) {
  const int n = ham.norb();
  Sparse h = fock.one_body(ham.one_body);
  for (Spin s : {Spin::alpha, Spin::beta})
    for (Spin t : {Spin::alpha, Spin::beta})
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            for (int u = 0; u < n; ++u) {
              const cplx c = ham.two_body(p, q, r, u);
              if (c == cplx(0.0)) continue;
              const Sparse term =
                  fock.create(p, s) * fock.create(r, t) * fock.annihilate(u, t) * fock.annihilate(q, s);
              h += (0.5 * c) * term;
            }
  h += cplx(ham.constant) * fock.identity();
  return h;
}

}  // namespace fermisim::oracle
