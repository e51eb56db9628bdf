// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "fermisim/hamiltonians.hpp"

namespace fermisim {

struct FcidumpData {
  MolecularHamiltonian hamiltonian;
  int nelec = 0;
  int ms2 = 0;

  /// Sector implied by NELEC and MS2. Throws if they are inconsistent with NORB.
  SectorShape sector() const;
};

/// Reads a FCIDUMP: a `&FCI ... &END` (or `/`) namelist with NORB, NELEC and MS2,
/// then records `value i j k l` with 1-based chemist-notation indices. Records
/// with k = l = 0 are one-body integrals, all-zero indices the core energy, and
/// `value i 0 0 0` orbital energies (ignored). Errors carry line numbers.
FcidumpData parse_fcidump(std::istream& in);
FcidumpData read_fcidump_file(const std::string& path);

/// Writes the unique records (i >= j, k >= l, ij >= kl) at round-trip precision.
/// Throws std::invalid_argument if the integrals are complex or lack 8-fold symmetry.
void write_fcidump(std::ostream& out, const FcidumpData& data);

}  // namespace fermisim
