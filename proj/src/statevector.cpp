// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

namespace fermisim {

StateVector::StateVector(const SectorShape& shape) : shape_(shape) {
  const auto [da, db] = sector_dimension(shape);
  dim_alpha_ = da;
  dim_beta_ = db;
  amplitudes_.assign(sector_size(shape), cplx(0.0));
}

StateVector::StateVector(const SectorShape& shape, std::vector<cplx> amplitudes)
    : shape_(shape), amplitudes_(std::move(amplitudes)) {
  const auto [da, db] = sector_dimension(shape);
  dim_alpha_ = da;
  dim_beta_ = db;
  if (amplitudes_.size() != sector_size(shape)) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes_.size()) +
                                " does not match sector dimension " +
                                std::to_string(sector_size(shape)));
  }
}

StateVector StateVector::hartree_fock(const SectorShape& shape) { return basis(shape, 0, 0); }

StateVector StateVector::basis(const SectorShape& shape, std::size_t addr_alpha,
                               std::size_t addr_beta) {
  StateVector vec(shape);
  if (addr_alpha >= vec.dim_alpha_ || addr_beta >= vec.dim_beta_) {
    throw std::invalid_argument("basis address out of range");
  }
  vec.at(addr_alpha, addr_beta) = 1.0;
  return vec;
}

StateVector StateVector::configuration(const SectorShape& shape, StringMask alpha,
                                       StringMask beta) {
  return basis(shape, rank_string(alpha, shape.norb, shape.nalpha),
               rank_string(beta, shape.norb, shape.nbeta));
}

double StateVector::norm() const {
  // Two-level summation keeps the rounding error small for very long vectors.
  constexpr std::size_t kBlock = 4096;
  double total = 0.0;
  for (std::size_t start = 0; start < amplitudes_.size(); start += kBlock) {
    const std::size_t stop = std::min(start + kBlock, amplitudes_.size());
    double partial = 0.0;
    for (std::size_t i = start; i < stop; ++i) partial += std::norm(amplitudes_[i]);
    total += partial;
  }
  return std::sqrt(total);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  *this *= 1.0 / n;
}

void StateVector::require_same_shape(const StateVector& other) const {
  if (!(shape_ == other.shape_)) {
    throw std::invalid_argument("state vectors belong to different sectors");
  }
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += other.amplitudes_[i];
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] -= other.amplitudes_[i];
  return *this;
}

StateVector& StateVector::operator*=(cplx factor) {
  for (auto& x : amplitudes_) x *= factor;
  return *this;
}

StateVector operator+(StateVector lhs, const StateVector& rhs) { return lhs += rhs; }
StateVector operator-(StateVector lhs, const StateVector& rhs) { return lhs -= rhs; }
StateVector operator*(cplx factor, StateVector vec) { return vec *= factor; }

cplx vdot(const StateVector& a, const StateVector& b) {
  a.require_same_shape(b);
  cplx total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

double distance(const StateVector& a, const StateVector& b) {
  a.require_same_shape(b);
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::norm(a[i] - b[i]);
  return std::sqrt(total);
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  a.require_same_shape(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

namespace {

constexpr char kMagic[4] = {'F', 'S', 'V', '1'};

static_assert(std::endian::native == std::endian::little,
              "FSV1 I/O assumes a little-endian host");

void write_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t read_u32(std::istream& in) {
  std::uint32_t v = 0;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) {
    throw std::runtime_error("FSV1: truncated header");
  }
  return v;
}

}  // namespace

void write_statevector(std::ostream& out, const StateVector& vec) {
  out.write(kMagic, 4);
  write_u32(out, static_cast<std::uint32_t>(vec.shape().norb));
  write_u32(out, static_cast<std::uint32_t>(vec.shape().nalpha));
  write_u32(out, static_cast<std::uint32_t>(vec.shape().nbeta));
  // std::complex<double> is layout-compatible with double[2] (re, im).
  out.write(reinterpret_cast<const char*>(vec.data()),
            static_cast<std::streamsize>(vec.size() * sizeof(cplx)));
  if (!out) throw std::runtime_error("FSV1: write failed");
}

StateVector read_statevector(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("FSV1: bad magic bytes");
  }
  SectorShape shape;
  shape.norb = static_cast<int>(read_u32(in));
  shape.nalpha = static_cast<int>(read_u32(in));
  shape.nbeta = static_cast<int>(read_u32(in));
  shape.validate();
  std::vector<cplx> amps(sector_size(shape));
  if (!in.read(reinterpret_cast<char*>(amps.data()),
               static_cast<std::streamsize>(amps.size() * sizeof(cplx)))) {
    throw std::runtime_error("FSV1: truncated amplitude data");
  }
  return StateVector(shape, std::move(amps));
}

}  // namespace fermisim
