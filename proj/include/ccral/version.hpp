#pragma once

namespace ccral {
inline constexpr const char* kVersion = "0.1.0";
}
