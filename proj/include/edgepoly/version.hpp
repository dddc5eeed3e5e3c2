#pragma once

namespace edgepoly {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace edgepoly
