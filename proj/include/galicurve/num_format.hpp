#pragma once

#include <charconv>
#include <string>

namespace galicurve {

// Locale-independent decimal text with 12 significant digits; the precision
// used by every table and report the tools emit. Negative zero is normalized.
inline std::string format_sig12(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto r =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, r.ptr);
}

// Shortest round-trip form, for expression text and curve-spec files.
inline std::string format_shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace galicurve
