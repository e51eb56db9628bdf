// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/hubbard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fermisim {

std::vector<std::pair<int, int>> hubbard_edges(const HubbardSpec& spec) {
  if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("lattice dimensions must be >= 1");
  std::vector<std::pair<int, int>> edges;
  const auto site = [&](int x, int y) { return x + spec.nx * y; };
  const auto add = [&](int a, int b) { edges.emplace_back(std::min(a, b), std::max(a, b)); };
  for (int y = 0; y < spec.ny; ++y) {
    for (int x = 0; x < spec.nx; ++x) {
      if (x + 1 < spec.nx) add(site(x, y), site(x + 1, y));
      if (y + 1 < spec.ny) add(site(x, y), site(x, y + 1));
    }
    // For nx == 2 the wraparound edge coincides with the open one.
    if (spec.periodic_x && spec.nx > 2) add(site(spec.nx - 1, y), site(0, y));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

DiagonalCoulombHamiltonian build_hubbard(const HubbardSpec& spec) {
  const int n = spec.norb();
  DiagonalCoulombHamiltonian ham;
  ham.one_body = Matrix::Zero(n, n);
  for (const auto& [p, q] : hubbard_edges(spec)) {
    ham.one_body(p, q) = -spec.t_hop;
    ham.one_body(q, p) = -spec.t_hop;
  }
  ham.j_aa = RealMatrix::Zero(n, n);
  ham.j_bb = RealMatrix::Zero(n, n);
  ham.j_ab = spec.u_int * RealMatrix::Identity(n, n);
  return ham;
}

int electrons_per_spin(int norb, double filling) {
  const double count = filling * norb;
  const double rounded = std::round(count);
  if (!(std::abs(count - rounded) < 1e-9) || rounded < 0 || rounded > norb) {
    throw std::invalid_argument("filling " + std::to_string(filling) + " does not give a whole " +
                                "number of electrons per spin on " + std::to_string(norb) +
                                " orbitals");
  }
  return static_cast<int>(rounded);
}

}  // namespace fermisim
