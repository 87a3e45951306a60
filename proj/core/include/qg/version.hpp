#pragma once

namespace qg {

inline constexpr const char* kVersion = "0.1.0";

}
