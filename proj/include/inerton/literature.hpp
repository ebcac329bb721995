#pragma once

#include <string>
#include <vector>

#include "inerton/quantity.hpp"

namespace inerton {

/// A published mass estimate to compare against, e.g. Kolpakov's ~1e-73 kg
/// carrier mass or Zhuk's ~1e-69 kg graviton mass.
struct LiteratureValue {
    std::string label;
    Quantity mass; // kg, > 0
};

/// log10(a/b) for same-dimension positive quantities, evaluated in log
/// space so ratios spanning hundreds of decades cannot overflow.
double decades_between(const Quantity& a, const Quantity& b);

/// sqrt(a*b) as the log-space midpoint; the "average value between" two
/// masses dozens of decades apart is only meaningful geometrically.
Quantity geometric_mean_mass(const Quantity& a, const Quantity& b);

/// Kolpakov ~1e-73 kg and Zhuk ~1e-69 kg.
std::vector<LiteratureValue> default_literature();

/// JSON array of {"label": string, "mass_kg": number > 0}.
std::vector<LiteratureValue> load_literature_file(const std::string& path);
std::vector<LiteratureValue> parse_literature_json(const std::string& json_text);

} // namespace inerton
