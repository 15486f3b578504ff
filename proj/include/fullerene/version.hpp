#pragma once

namespace fullerene {

inline constexpr const char* kToolkitVersion = "1.0.0";

}  // namespace fullerene
