// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace fermisim {

/// Environment variable consulted by init_threads_from_env().
inline constexpr const char* kThreadsEnv = "FERMISIM_NUM_THREADS";

void set_num_threads(int n);
int num_threads();
/// Applies FERMISIM_NUM_THREADS when set to a positive integer. Returns the resulting thread count.
int init_threads_from_env();

}  // namespace fermisim
