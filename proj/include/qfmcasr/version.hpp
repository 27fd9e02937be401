#pragma once

namespace qfmcasr {

inline constexpr const char* kToolVersion = "qfmcasr 1.0.0";

}  // namespace qfmcasr
