#include "inerton/units.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace inerton {

namespace {

struct UnitDef {
    const char* name;
    double to_si;
    Dimension dim;
    bool is_c; // magnitude scales with the configured speed of light
};

// Canonical spellings first; aliases for units that are awkward to type.
constexpr UnitDef kUnits[] = {
    {"m", 1.0, dim::length, false},
    {"cm", 1e-2, dim::length, false},
    {"kg", 1.0, dim::mass, false},
    {"g", 1e-3, dim::mass, false},
    {"s", 1.0, dim::time, false},
    {"m/s", 1.0, dim::velocity, false},
    {"cm/s", 1e-2, dim::velocity, false},
    {"µm/s", 1e-6, dim::velocity, false}, // micro sign
    {"μm/s", 1e-6, dim::velocity, false}, // greek mu
    {"um/s", 1e-6, dim::velocity, false},
    {"c", 1.0, dim::velocity, true},
    {"J·s", 1.0, dim::action, false},
    {"J.s", 1.0, dim::action, false},
    {"J*s", 1.0, dim::action, false},
    {"dimensionless", 1.0, dim::none, false},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Quantity parse_quantity(std::string_view text, const Constants& k) {
    std::string_view s = trim(text);
    if (s.empty()) throw config_error("empty quantity");

    double value = 0.0;
    auto [num_end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw config_error("magnitude out of double range in quantity \"" + std::string(text) +
                           "\"");
    if (ec != std::errc() || num_end == s.data())
        throw config_error("cannot parse number in quantity \"" + std::string(text) + "\"");
    if (!std::isfinite(value))
        throw config_error("non-finite magnitude in quantity \"" + std::string(text) + "\"");

    std::string_view unit = trim(s.substr(static_cast<size_t>(num_end - s.data())));
    if (unit.empty())
        throw config_error("missing unit in quantity \"" + std::string(text) +
                           "\" (write e.g. \"1e-30 m\" or \"5 dimensionless\")");

    for (const UnitDef& u : kUnits) {
        if (unit == u.name) {
            double scale = u.is_c ? k.c.magnitude() : u.to_si;
            return Quantity(value * scale, u.dim);
        }
    }
    throw config_error("unknown unit \"" + std::string(unit) + "\" in quantity \"" +
                       std::string(text) + "\"");
}

std::string format_quantity(const Quantity& q) { return q.str(); }

std::string format_sci6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

} // namespace inerton
