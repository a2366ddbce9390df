#pragma once

namespace lrc {

inline constexpr const char* engine_name = "lrcoh";
inline constexpr const char* engine_version = "1.0.0";

}  // namespace lrc
