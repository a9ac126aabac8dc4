#pragma once

#include <string>

namespace lsys {

class ExtendedReal;

/// 12 significant digits, trailing zeros kept ("%#.12g"); negative zero prints
/// as positive, infinities as "inf"/"-inf".
std::string format_real(double value);

std::string format_real(const ExtendedReal& value);

/// Rounds to 12 significant digits, for values placed in JSON reports.
double round_significant(double value);

}  // namespace lsys
