#pragma once

namespace schubertq {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace schubertq
