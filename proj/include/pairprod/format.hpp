#pragma once

#include <charconv>
#include <complex>
#include <string>
#include <system_error>

namespace pairprod {

/// Shortest decimal representation that round-trips the double exactly;
/// deterministic, used for every numeric field written to disk.
inline std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string fmt_int(long long v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace pairprod
