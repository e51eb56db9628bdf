// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "fermisim/common.hpp"
#include "fermisim/sector.hpp"

namespace fermisim {

/// Dense amplitudes over a symmetry sector, stored alpha-major:
/// entry (addr_alpha * dim_beta + addr_beta) holds gamma(I_alpha, I_beta).
class StateVector {
 public:
  /// Zero vector.
  explicit StateVector(const SectorShape& shape);
  /// Takes ownership of `amplitudes`; throws if the length is not the sector size.
  StateVector(const SectorShape& shape, std::vector<cplx> amplitudes);

  static StateVector hartree_fock(const SectorShape& shape);
  static StateVector basis(const SectorShape& shape, std::size_t addr_alpha, std::size_t addr_beta);
  /// Configuration given by occupation bitmasks.
  static StateVector configuration(const SectorShape& shape, StringMask alpha, StringMask beta);

  const SectorShape& shape() const { return shape_; }
  int norb() const { return shape_.norb; }
  std::size_t dim_alpha() const { return dim_alpha_; }
  std::size_t dim_beta() const { return dim_beta_; }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<cplx> amplitudes() { return amplitudes_; }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  cplx* data() { return amplitudes_.data(); }
  const cplx* data() const { return amplitudes_.data(); }

  cplx& operator[](std::size_t i) { return amplitudes_[i]; }
  const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }
  cplx& at(std::size_t addr_alpha, std::size_t addr_beta) {
    return amplitudes_[addr_alpha * dim_beta_ + addr_beta];
  }
  const cplx& at(std::size_t addr_alpha, std::size_t addr_beta) const {
    return amplitudes_[addr_alpha * dim_beta_ + addr_beta];
  }

  double norm() const;
  void normalize();

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(cplx factor);

  /// Throws std::invalid_argument when `other` lives in a different sector.
  void require_same_shape(const StateVector& other) const;

 private:
  SectorShape shape_;
  std::size_t dim_alpha_;
  std::size_t dim_beta_;
  std::vector<cplx> amplitudes_;
};

StateVector operator+(StateVector lhs, const StateVector& rhs);
StateVector operator-(StateVector lhs, const StateVector& rhs);
StateVector operator*(cplx factor, StateVector vec);

/// <a|b>, conjugating the left argument.
cplx vdot(const StateVector& a, const StateVector& b);
double distance(const StateVector& a, const StateVector& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

/// FSV1 binary layout: "FSV1", norb/nalpha/nbeta as u32 LE, then interleaved f64 LE (re, im).
void write_statevector(std::ostream& out, const StateVector& vec);
StateVector read_statevector(std::istream& in);

}  // namespace fermisim
