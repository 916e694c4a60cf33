#pragma once

#include <string_view>

namespace subsumlab {

inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace subsumlab
