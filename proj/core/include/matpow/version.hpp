#pragma once

namespace matpow {

inline constexpr const char* kToolName = "matpow";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace matpow
