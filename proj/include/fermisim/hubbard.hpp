// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "fermisim/hamiltonians.hpp"

namespace fermisim {

struct HubbardSpec {
  int nx = 1;
  int ny = 1;
  double t_hop = 1.0;
  double u_int = 8.0;
  bool periodic_x = true;

  int norb() const { return nx * ny; }
};

/// Nearest-neighbour edges (p < q) of the nx x ny grid, site p = x + nx * y.
/// The x wraparound is included when periodic_x and nx > 2.
std::vector<std::pair<int, int>> hubbard_edges(const HubbardSpec& spec);

/// -t on every edge, U n_{p alpha} n_{p beta} on every site.
DiagonalCoulombHamiltonian build_hubbard(const HubbardSpec& spec);

/// Electrons per spin at the given filling (electrons per spin orbital).
/// Throws std::invalid_argument unless filling * norb is a whole number.
int electrons_per_spin(int norb, double filling);

}  // namespace fermisim
