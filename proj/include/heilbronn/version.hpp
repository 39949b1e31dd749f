#pragma once

namespace heilbronn {

inline constexpr const char* kVersion = "0.1.0";

} // namespace heilbronn
