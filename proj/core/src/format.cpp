#include "lsys/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "lsys/analysis.hpp"

namespace lsys {

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", value);
  return buf;
}

std::string format_real(const ExtendedReal& value) {
  return value.is_infinite() ? std::string("inf") : format_real(value.value());
}

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return std::strtod(buf, nullptr);
}

}  // namespace lsys
