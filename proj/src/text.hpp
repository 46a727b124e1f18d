#pragma once

#include <charconv>
#include <string>

namespace tourlab {

// Shortest representation that parses back to the same double.
inline std::string format_real(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

}  // namespace tourlab
