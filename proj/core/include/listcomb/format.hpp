#pragma once

#include <cstdio>
#include <string>

namespace listcomb {

// Locale-independent shortest-ish rendering used in every CSV/text report.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace listcomb
