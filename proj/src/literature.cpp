#include "inerton/literature.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace inerton {

namespace {

void require_positive_same_dim(const Quantity& a, const Quantity& b) {
    require_same_dim(a.dim(), b.dim(), "compare");
    if (!(a.magnitude() > 0.0) || !(b.magnitude() > 0.0))
        throw numeric_error("comparison requires positive quantities (got " + a.str() +
                            " and " + b.str() + ")");
}

} // namespace

double decades_between(const Quantity& a, const Quantity& b) {
    require_positive_same_dim(a, b);
    return std::log10(a.magnitude()) - std::log10(b.magnitude());
}

Quantity geometric_mean_mass(const Quantity& a, const Quantity& b) {
    require_positive_same_dim(a, b);
    // sqrt of each factor first: the direct product a*b would leave the
    // double range for masses this small.
    return {std::sqrt(a.magnitude()) * std::sqrt(b.magnitude()), a.dim()};
}

std::vector<LiteratureValue> default_literature() {
    return {
        {"Kolpakov", kilograms(1e-73)},
        {"Zhuk", kilograms(1e-69)},
    };
}

std::vector<LiteratureValue> parse_literature_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("references file is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw config_error("references file must be a JSON array");

    std::vector<LiteratureValue> refs;
    for (const auto& entry : j) {
        if (!entry.is_object())
            throw config_error("each reference must be an object with \"label\" and \"mass_kg\"");
        LiteratureValue ref;
        bool have_label = false, have_mass = false;
        for (const auto& [key, value] : entry.items()) {
            if (key == "label") {
                if (!value.is_string()) throw config_error("reference \"label\" must be a string");
                ref.label = value.get<std::string>();
                have_label = true;
            } else if (key == "mass_kg") {
                if (!value.is_number()) throw config_error("reference \"mass_kg\" must be a number");
                double m = value.get<double>();
                if (!(m > 0.0) || !std::isfinite(m))
                    throw config_error("reference \"mass_kg\" must be a positive finite number");
                ref.mass = kilograms(m);
                have_mass = true;
            } else {
                throw config_error("unknown key \"" + key + "\" in references file");
            }
        }
        if (!have_label || !have_mass)
            throw config_error("each reference needs both \"label\" and \"mass_kg\"");
        refs.push_back(std::move(ref));
    }
    return refs;
}

std::vector<LiteratureValue> load_literature_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open references file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_literature_json(text.str());
}

} // namespace inerton
