#pragma once

namespace occ {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace occ
