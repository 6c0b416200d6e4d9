#pragma once

namespace orbitcount {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orbitcount
