// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace fermisim {

void set_num_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int num_threads() { return omp_get_max_threads(); }

int init_threads_from_env() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const int n = std::stoi(env);
      if (n > 0) set_num_threads(n);
    } catch (const std::exception&) {
      // Ignore malformed values; OpenMP defaults stay in effect.
    }
  }
  return num_threads();
}

}  // namespace fermisim
