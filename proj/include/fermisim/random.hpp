// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "fermisim/statevector.hpp"

namespace fermisim {

/// Counter-based stream built on the SplitMix64 finalizer. Draw k of stream
/// (seed, stream) is a pure function of (seed, stream, k), so independent
/// streams can be consumed from any thread with reproducible results.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, both halves used).
  double normal();
  void seek(std::uint64_t counter) {
    counter_ = counter;
    has_spare_ = false;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Uniformly random unit vector: complex standard Gaussian entries, normalized.
/// Output is independent of the thread count.
StateVector random_state_vector(const SectorShape& shape, std::uint64_t seed);

}  // namespace fermisim
