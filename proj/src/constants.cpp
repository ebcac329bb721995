#include "inerton/constants.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace inerton {

Constants Constants::codata() {
    Constants k;
    k.c = meters_per_second(299792458.0);     // exact
    k.h = Quantity(6.62607015e-34, dim::action); // exact
    k.presets = {
        {"electron", kilograms(9.1093837015e-31)},
        {"proton", kilograms(1.67262192369e-27)},
        {"hydrogen", kilograms(1.6735e-27)},
    };
    return k;
}

const Quantity& Constants::preset(const std::string& name) const {
    auto it = presets.find(name);
    if (it != presets.end()) return it->second;
    std::string known;
    for (const auto& [n, _] : presets) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw config_error("unknown particle preset \"" + name + "\" (known: " + known + ")");
}

namespace {

double finite_number(const nlohmann::json& j, const std::string& key) {
    if (!j.is_number())
        throw config_error("constants override \"" + key + "\" must be a number");
    double v = j.get<double>();
    if (!std::isfinite(v))
        throw config_error("constants override \"" + key + "\" is not finite");
    return v;
}

} // namespace

Constants parse_constants_overrides(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("constants file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("constants file must be a JSON object");

    Constants k = Constants::codata();
    for (const auto& [key, value] : j.items()) {
        if (key == "c_m_per_s") {
            double v = finite_number(value, key);
            if (v <= 0.0) throw config_error("constants override \"c_m_per_s\" must be > 0");
            k.c = meters_per_second(v);
        } else if (key == "h_J_s") {
            double v = finite_number(value, key);
            if (v <= 0.0) throw config_error("constants override \"h_J_s\" must be > 0");
            k.h = Quantity(v, dim::action);
        } else if (key == "presets") {
            if (!value.is_object())
                throw config_error("constants override \"presets\" must be an object");
            for (const auto& [name, mass] : value.items()) {
                double v = finite_number(mass, "presets." + name);
                if (v <= 0.0)
                    throw config_error("preset \"" + name + "\" rest mass must be > 0");
                k.presets[name] = kilograms(v);
            }
        } else {
            throw config_error("unknown key \"" + key + "\" in constants file");
        }
    }
    return k;
}

Constants load_constants_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open constants file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_constants_overrides(text.str());
}

} // namespace inerton
