#pragma once

namespace irtr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace irtr
