#pragma once

namespace ideq {
inline constexpr const char* kVersion = "0.1.0";
}
