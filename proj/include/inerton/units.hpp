#pragma once

#include <string>
#include <string_view>

#include "inerton/constants.hpp"
#include "inerton/quantity.hpp"

namespace inerton {

/// Parses "<decimal>[ ]<unit>" and normalizes to SI base units.
///
/// Units: m, cm, kg, g, s, m/s, cm/s, μm/s (alias um/s), c, J·s (aliases
/// J.s, J*s), dimensionless. "x c" converts with the configured speed of
/// light, which is why the constants are a parameter.
Quantity parse_quantity(std::string_view text, const Constants& k);

/// Full-precision formatting; parse_quantity(format_quantity(q)) recovers q
/// exactly for every dimension with a canonical unit spelling.
std::string format_quantity(const Quantity& q);

/// Report-table number format: scientific notation, 6 significant digits.
/// Golden-file stable; do not change casually.
std::string format_sci6(double v);

} // namespace inerton
