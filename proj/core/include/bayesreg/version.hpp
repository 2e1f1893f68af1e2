#pragma once

namespace bayesreg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bayesreg
