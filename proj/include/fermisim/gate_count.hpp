// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

// Two-qubit gate accounting for Jordan-Wigner circuits: each Givens rotation
// and each controlled-phase gate counts as one two-qubit gate.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "fermisim/common.hpp"

namespace fermisim {

/// Nonzero pattern of an N x N matrix, row-major.
struct SparsityMask {
  int n = 0;
  std::vector<bool> bits;

  static SparsityMask dense(int n);
  static SparsityMask identity(int n);
  static SparsityMask zero(int n);
  static SparsityMask of(const RealMatrix& m, double tol = 0.0);
  static SparsityMask of(const Matrix& m, double tol = 0.0);
  bool operator()(int i, int j) const { return bits[static_cast<std::size_t>(i) * n + j]; }
  void set(int i, int j, bool v = true) { bits[static_cast<std::size_t>(i) * n + j] = v; }
};

/// Orbital rotation per spin; std::nullopt means the spin is not rotated.
struct RotationOp {
  std::optional<SparsityMask> alpha;
  std::optional<SparsityMask> beta;
};

struct DiagCoulombOp {
  SparsityMask j_aa;
  SparsityMask j_ab;
  SparsityMask j_bb;
};

struct SlaterPrepOp {
  int norb = 0;
  int nalpha = 0;
  int nbeta = 0;
};

using PlanOp = std::variant<RotationOp, DiagCoulombOp, SlaterPrepOp>;

struct CircuitPlan {
  int norb = 0;
  std::vector<PlanOp> ops;
};

/// Givens rotations needed by adjacent-pair elimination of a matrix with this
/// pattern (fill-in tracked symbolically). Dense gives N(N-1)/2, identity 0.
std::size_t givens_count(const SparsityMask& mask);

/// Merges runs of adjacent rotations into one (pattern of the product).
CircuitPlan merge_rotations(const CircuitPlan& plan);

/// Total two-qubit gates after merging adjacent rotations.
std::size_t count_two_qubit_gates(const CircuitPlan& plan);

/// JSON plan, schema in docs/formats.md.
CircuitPlan parse_plan_json(std::istream& in);

}  // namespace fermisim
