#pragma once

#include <map>
#include <string>

#include "inerton/quantity.hpp"

namespace inerton {

/// Physical constants and named particle rest masses. Defaults are CODATA
/// (2018 adjustment; c and h are exact SI definitions). Every value can be
/// overridden from a JSON file, so reports always record the values used.
struct Constants {
    Quantity c; // speed of light, m/s
    Quantity h; // Planck constant, J·s
    std::map<std::string, Quantity> presets; // rest masses, kg

    static Constants codata();

    /// Rest mass for a named preset; throws config_error listing the known
    /// names if absent.
    const Quantity& preset(const std::string& name) const;
};

/// Overrides applied on top of codata(). Accepted keys: "c_m_per_s",
/// "h_J_s", "presets" (object of name -> rest mass in kg). Anything else is
/// rejected with the offending key named.
Constants load_constants_file(const std::string& path);
Constants parse_constants_overrides(const std::string& json_text);

} // namespace inerton
