#pragma once

namespace catphase {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catphase
