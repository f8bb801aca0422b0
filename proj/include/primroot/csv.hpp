#pragma once

#include <charconv>
#include <string>

namespace primroot {

// Shortest round-trip decimal rendering (std::to_chars); the CSV number
// format documented in the README.
inline std::string fmt_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace primroot
