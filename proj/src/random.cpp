// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/random.hpp"

#include <cmath>
#include <numbers>

namespace fermisim {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL))) {}

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t k = counter_++;
  return splitmix64(key_ ^ splitmix64(k));
}

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

StateVector random_state_vector(const SectorShape& shape, std::uint64_t seed) {
  StateVector vec(shape);
  cplx* out = vec.data();
  const auto n = static_cast<std::int64_t>(vec.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    CounterRng rng(seed, 0);
    rng.seek(2 * static_cast<std::uint64_t>(i));
    // One Box-Muller pair per amplitude: counters 2i and 2i + 1.
    const double re = rng.normal();
    out[i] = cplx(re, rng.normal());
  }
  vec.normalize();
  return vec;
}

}  // namespace fermisim
