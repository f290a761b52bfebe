#pragma once

namespace zqlab {
inline constexpr const char* kVersion = "0.1.0";
}
