#pragma once

namespace alliance {

inline constexpr const char* tool_name = "alliancekit";
inline constexpr const char* tool_version = "0.1.0";

}  // namespace alliance
