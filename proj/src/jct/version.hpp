#pragma once

namespace jct {

inline constexpr const char* version = "0.1.0";

} // namespace jct
