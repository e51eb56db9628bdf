// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fermisim/gates.hpp"
#include "fermisim/random.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim {

struct Configuration {
  StringMask alpha = 0;
  StringMask beta = 0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Slater determinant U |I_alpha, I_beta> described by its orbital rotation and reference.
struct SlaterSpec {
  int norb = 0;
  std::vector<int> occ_alpha;
  std::vector<int> occ_beta;
  OrbitalRotationSpec rotation;

  void validate(double tol = kMatrixTol) const;
  SectorShape shape() const;
};

/// Draws from |gamma(I_alpha, I_beta)|^2. Shot k uses its own counter stream of `seed`.
std::vector<Configuration> sample_state_vector(const StateVector& vec, std::size_t shots,
                                               std::uint64_t seed);

/// |det U_alpha[I_alpha, ref_alpha]|^2 |det U_beta[I_beta, ref_beta]|^2.
double slater_probability(const SlaterSpec& spec, const Configuration& config);

/// Projection-DPP sampler; O(eta^2 N) per shot and never forms the sector vector.
std::vector<Configuration> sample_slater(const SlaterSpec& spec, std::size_t shots,
                                         std::uint64_t seed);

/// Occupied orbitals of one spin drawn from the projection DPP with kernel Q Q^dagger,
/// Q having orthonormal columns. Exposed for testing.
StringMask sample_projection_dpp(const Matrix& q, CounterRng& rng);

/// JSON Slater specification, schema in docs/formats.md.
SlaterSpec parse_slater_spec_json(std::istream& in);

/// "beta/alpha" bitstrings, orbital 0 rightmost in each.
std::string format_configuration(const Configuration& config, int norb);

}  // namespace fermisim
