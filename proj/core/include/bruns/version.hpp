#pragma once

namespace bruns {

inline constexpr const char* kVersion = "0.1.0";

} // namespace bruns
