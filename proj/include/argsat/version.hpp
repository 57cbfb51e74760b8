// SPDX-License-Identifier: MIT
#pragma once

namespace argsat {

inline constexpr const char* kVersion = "0.3.0";

} // namespace argsat
