#pragma once

namespace kdiff {
inline constexpr const char* version = "0.1.0";
}
