#pragma once

namespace lexidim {

inline constexpr const char* kToolName = "lexidim";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace lexidim
