#pragma once

namespace flatkit {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "flatkit";

}  // namespace flatkit
