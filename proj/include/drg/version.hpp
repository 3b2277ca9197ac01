#pragma once

namespace drg {

inline constexpr const char* TOOL_NAME = "drgtool";
inline constexpr const char* TOOL_VERSION = "0.1.0";

}  // namespace drg
