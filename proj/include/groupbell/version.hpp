#pragma once

namespace groupbell {
inline constexpr const char* kToolName = "groupbell";
inline constexpr const char* kVersion = "0.1.0";
}  // namespace groupbell
