// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace fermisim {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace fermisim
