#pragma once

namespace geoprove {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace geoprove
