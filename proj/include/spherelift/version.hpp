#pragma once

namespace slift {
inline constexpr const char* kVersion = "0.1.0";
}
