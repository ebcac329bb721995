#include "inerton/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "inerton/parallel_map.hpp"
#include "inerton/units.hpp"

namespace inerton {

const char* to_string(Spacing s) { return s == Spacing::log ? "log" : "linear"; }

const std::vector<std::string>& scenario_columns() {
    static const std::vector<std::string> cols = {
        "v0_m_per_s",     "v0_over_c",           "gamma",
        "lambda_m",       "compton_m",           "delta_m_kg",
        "amplitude_m",    "inerton_count",       "mean_inerton_mass_kg",
        "crystallite_count", "crystallite_mass_kg", "crossover",
        "note",
    };
    return cols;
}

namespace {

Spacing spacing_from_string(const std::string& s) {
    if (s == "linear") return Spacing::linear;
    if (s == "log") return Spacing::log;
    throw config_error("unknown sweep spacing \"" + s + "\" (expected linear or log)");
}

Quantity parse_velocity_quantity(const nlohmann::json& j, const char* what,
                                 const Constants& k) {
    if (!j.is_string())
        throw config_error(std::string(what) + " must be a quantity string like \"0.01 c\"");
    Quantity q = parse_quantity(j.get<std::string>(), k);
    require_same_dim(q.dim(), dim::velocity, "use as velocity");
    return q;
}

double positive_number(const nlohmann::json& j, const std::string& key) {
    if (!j.is_number()) throw config_error("scenario \"" + key + "\" must be a number");
    double v = j.get<double>();
    if (!std::isfinite(v) || !(v > 0.0))
        throw config_error("scenario \"" + key + "\" must be a positive finite number");
    return v;
}

void parse_particle(Scenario& s, const nlohmann::json& j, const Constants& k) {
    if (j.is_string()) {
        s.preset = j.get<std::string>();
        k.preset(*s.preset); // validate now so the error names the preset
        s.particle_label = *s.preset;
        return;
    }
    if (!j.is_object())
        throw config_error(
            "scenario \"particle\" must be a preset name or {\"rest_mass_kg\": ...}");
    for (const auto& [key, value] : j.items()) {
        if (key == "rest_mass_kg") {
            s.rest_mass = kilograms(positive_number(value, "particle.rest_mass_kg"));
        } else if (key == "name") {
            if (!value.is_string()) throw config_error("scenario \"particle.name\" must be a string");
            s.particle_label = value.get<std::string>();
        } else {
            throw config_error("unknown key \"particle." + key + "\" in scenario");
        }
    }
    if (!s.rest_mass) throw config_error("scenario \"particle\" object needs \"rest_mass_kg\"");
    if (s.particle_label.empty()) s.particle_label = "custom";
}

void parse_velocity(Scenario& s, const nlohmann::json& j, const Constants& k) {
    if (j.is_string()) {
        s.velocity = parse_velocity_quantity(j, "scenario \"velocity\"", k);
        return;
    }
    if (!j.is_object())
        throw config_error("scenario \"velocity\" must be a quantity string or a sweep object");
    SweepSpec sweep;
    bool have_from = false, have_to = false, have_points = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "from") {
            sweep.from = parse_velocity_quantity(value, "sweep \"from\"", k);
            have_from = true;
        } else if (key == "to") {
            sweep.to = parse_velocity_quantity(value, "sweep \"to\"", k);
            have_to = true;
        } else if (key == "points") {
            if (!value.is_number_integer())
                throw config_error("sweep \"points\" must be an integer");
            sweep.points = value.get<int>();
            have_points = true;
        } else if (key == "spacing") {
            if (!value.is_string()) throw config_error("sweep \"spacing\" must be a string");
            sweep.spacing = spacing_from_string(value.get<std::string>());
        } else {
            throw config_error("unknown key \"velocity." + key + "\" in scenario");
        }
    }
    if (!have_from || !have_to || !have_points)
        throw config_error("sweep needs \"from\", \"to\" and \"points\"");
    if (sweep.points < 2) throw config_error("sweep \"points\" must be >= 2");
    if (!(sweep.from.magnitude() < sweep.to.magnitude()))
        throw config_error("sweep requires from < to (got " + sweep.from.str() + " .. " +
                           sweep.to.str() + ")");
    if (sweep.spacing == Spacing::log && !(sweep.from.magnitude() > 0.0))
        throw config_error("log spacing requires from > 0");
    s.velocity = sweep;
}

void parse_spectrum(Scenario& s, const nlohmann::json& j) {
    if (!j.is_object()) throw config_error("scenario \"spectrum\" must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "law") {
            if (!value.is_string()) throw config_error("spectrum \"law\" must be a string");
            s.law = spectrum_law_from_string(value.get<std::string>());
        } else if (key == "dynamic_range") {
            double r = positive_number(value, "spectrum.dynamic_range");
            if (r < 1.0) throw config_error("spectrum \"dynamic_range\" must be >= 1");
            s.dynamic_range = r;
        } else if (key == "amplitude_exponent") {
            s.amplitude_exponent = positive_number(value, "spectrum.amplitude_exponent");
        } else {
            throw config_error("unknown key \"spectrum." + key + "\" in scenario");
        }
    }
}

std::string bracket_text(double lo, double hi) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g..%g kg", lo, hi);
    return buf;
}

} // namespace

Scenario parse_scenario_json(const std::string& json_text, const Constants& k) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("scenario must be a JSON object");

    Scenario s;
    bool have_particle = false, have_velocity = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "name") {
            if (!value.is_string()) throw config_error("scenario \"name\" must be a string");
            s.name = value.get<std::string>();
        } else if (key == "particle") {
            parse_particle(s, value, k);
            have_particle = true;
        } else if (key == "velocity") {
            parse_velocity(s, value, k);
            have_velocity = true;
        } else if (key == "superparticle_edge") {
            if (!value.is_string())
                throw config_error("scenario \"superparticle_edge\" must be a quantity string");
            Quantity edge = parse_quantity(value.get<std::string>(), k);
            require_same_dim(edge.dim(), dim::length, "use as superparticle edge");
            if (!(edge.magnitude() > 0.0))
                throw config_error("scenario \"superparticle_edge\" must be > 0");
            s.superparticle_edge = edge;
        } else if (key == "de_broglie") {
            if (!value.is_string()) throw config_error("scenario \"de_broglie\" must be a string");
            s.mode = de_broglie_mode_from_string(value.get<std::string>());
        } else if (key == "spectrum") {
            parse_spectrum(s, value);
        } else if (key == "stated_mass_bracket_kg") {
            if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
                !value[1].is_number())
                throw config_error("\"stated_mass_bracket_kg\" must be [low, high] in kg");
            double lo = value[0].get<double>();
            double hi = value[1].get<double>();
            if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi))
                throw config_error("\"stated_mass_bracket_kg\" must satisfy 0 < low <= high");
            s.stated_mass_bracket_kg = {lo, hi};
        } else if (key == "format") {
            if (!value.is_string()) throw config_error("scenario \"format\" must be a string");
            s.format = output_format_from_string(value.get<std::string>());
        } else {
            throw config_error("unknown key \"" + key + "\" in scenario");
        }
    }
    if (!have_particle) throw config_error("scenario needs a \"particle\"");
    if (!have_velocity) throw config_error("scenario needs a \"velocity\"");
    return s;
}

const std::map<std::string, std::string>& builtin_scenarios() {
    static const std::map<std::string, std::string> builtins = {
        {"paper-electron-sweep", R"({
  "name": "paper-electron-sweep",
  "particle": "electron",
  "velocity": {"from": "0.01 c", "to": "0.999 c", "points": 16, "spacing": "log"},
  "superparticle_edge": "1e-30 m",
  "de_broglie": "nonrelativistic",
  "spectrum": {"law": "geometric", "dynamic_range": 1000.0, "amplitude_exponent": 1.0},
  "stated_mass_bracket_kg": [1e-57, 1e-45],
  "format": "csv"
})"},
        {"paper-electron-crystallite", R"({
  "name": "paper-electron-crystallite",
  "particle": "electron",
  "velocity": "0.01 c",
  "superparticle_edge": "1e-30 m",
  "de_broglie": "nonrelativistic",
  "spectrum": {"law": "geometric", "dynamic_range": 1000.0, "amplitude_exponent": 1.0},
  "format": "csv"
})"},
        {"paper-atom-in-solid", R"({
  "name": "paper-atom-in-solid",
  "particle": "hydrogen",
  "velocity": "1 um/s",
  "superparticle_edge": "1e-30 m",
  "de_broglie": "nonrelativistic",
  "spectrum": {"law": "geometric", "dynamic_range": 1000.0, "amplitude_exponent": 1.0},
  "stated_mass_bracket_kg": [1e-70, 1e-45],
  "format": "csv"
})"},
    };
    return builtins;
}

Scenario load_scenario(const std::string& name_or_path, const Constants& k) {
    auto it = builtin_scenarios().find(name_or_path);
    if (it != builtin_scenarios().end()) return parse_scenario_json(it->second, k);

    std::ifstream in(name_or_path);
    if (!in) {
        std::string names;
        for (const auto& [n, _] : builtin_scenarios()) {
            if (!names.empty()) names += ", ";
            names += n;
        }
        throw config_error("no scenario named \"" + name_or_path +
                           "\" (builtins: " + names + ") and no such file");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario_json(text.str(), k);
}

std::vector<double> velocity_points_m_per_s(const Scenario& s) {
    if (std::holds_alternative<Quantity>(s.velocity))
        return {std::get<Quantity>(s.velocity).magnitude()};

    const SweepSpec& sweep = std::get<SweepSpec>(s.velocity);
    double from = sweep.from.magnitude();
    double to = sweep.to.magnitude();
    int n = sweep.points;
    std::vector<double> points(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / (n - 1);
        points[static_cast<size_t>(i)] =
            sweep.spacing == Spacing::log ? from * std::exp(t * std::log(to / from))
                                          : from + t * (to - from);
    }
    points.front() = from; // endpoints match the requested bounds exactly
    points.back() = to;
    for (size_t i = 1; i < points.size(); ++i)
        if (!(points[i] > points[i - 1]))
            throw config_error("sweep points are not strictly ascending; reduce \"points\"");
    return points;
}

Particle scenario_particle(const Scenario& s, double v0_m_per_s, const Constants& k) {
    Quantity mass = s.preset ? k.preset(*s.preset) : *s.rest_mass;
    return make_particle(mass, meters_per_second(v0_m_per_s), s.particle_label, k);
}

namespace {

ScenarioRow compute_row(const Scenario& s, double v, const Constants& k) {
    Particle p = scenario_particle(s, v, k);
    CloudConfig cfg{p, s.superparticle_edge, s.mode, s.law, s.dynamic_range,
                    s.amplitude_exponent};

    ScenarioRow row;
    row.v0_m_per_s = v;
    row.v0_over_c = v / k.c.magnitude();
    row.gamma = lorentz_gamma(p, k).magnitude();
    row.lambda_m = de_broglie_wavelength(p, s.mode, k).magnitude();
    row.compton_m = compton_wavelength(p, k).magnitude();
    row.delta_m_kg = mass_excess(p, k).magnitude();
    row.amplitude_m = cloud_amplitude(cfg, k).magnitude();
    row.inerton_count = inerton_count(cfg, k).magnitude();
    row.mean_inerton_mass_kg = mean_inerton_mass(cfg, k).magnitude();

    CrystalliteReport coat = crystallite_report({p, s.superparticle_edge, MassFrame::rest}, k);
    row.crystallite_count = coat.superparticle_count.magnitude();
    row.crystallite_mass_kg = coat.superparticle_mass.magnitude();

    row.crossover = crossover(build_spectrum(cfg, k), coat.superparticle_mass);

    if (s.stated_mass_bracket_kg) {
        auto [lo, hi] = *s.stated_mass_bracket_kg;
        if (row.mean_inerton_mass_kg < lo)
            row.note = "mean inerton mass " + format_sci6(row.mean_inerton_mass_kg) +
                       " kg below stated range " + bracket_text(lo, hi);
        else if (row.mean_inerton_mass_kg > hi)
            row.note = "mean inerton mass " + format_sci6(row.mean_inerton_mass_kg) +
                       " kg above stated range " + bracket_text(lo, hi);
    }
    return row;
}

template <typename ErrorType>
[[noreturn]] void rethrow_for_row(double v, const ErrorType& e) {
    throw ErrorType("row at v0 = " + format_sci6(v) + " m/s: " + e.what());
}

} // namespace

ScenarioReport run_scenario(const Scenario& s, const Constants& k, bool parallel) {
    std::vector<double> points = velocity_points_m_per_s(s);
    auto evaluate = [&](double v) {
        try {
            return compute_row(s, v, k);
        } catch (const config_error& e) {
            rethrow_for_row(v, e);
        } catch (const numeric_error& e) {
            rethrow_for_row(v, e);
        }
    };
    ScenarioReport report{s, k, {}};
    report.rows = parallel_map(points, evaluate, parallel ? 0 : 1);
    return report;
}

namespace {

nlohmann::ordered_json scenario_metadata(const ScenarioReport& r) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    meta["tool"] = kToolName;
    meta["version"] = kToolVersion;
    meta["scenario"] = r.scenario.name;
    meta["particle"] = r.scenario.particle_label;
    meta["rest_mass_kg"] = (r.scenario.preset ? r.constants.preset(*r.scenario.preset)
                                              : *r.scenario.rest_mass)
                               .magnitude();
    if (std::holds_alternative<Quantity>(r.scenario.velocity)) {
        meta["velocity"] = {{"value_m_per_s", std::get<Quantity>(r.scenario.velocity).magnitude()}};
    } else {
        const SweepSpec& sweep = std::get<SweepSpec>(r.scenario.velocity);
        meta["velocity"] = {{"from_m_per_s", sweep.from.magnitude()},
                            {"to_m_per_s", sweep.to.magnitude()},
                            {"points", sweep.points},
                            {"spacing", to_string(sweep.spacing)}};
    }
    meta["c_m_per_s"] = r.constants.c.magnitude();
    meta["h_J_s"] = r.constants.h.magnitude();
    meta["superparticle_edge_m"] = r.scenario.superparticle_edge.magnitude();
    meta["de_broglie"] = to_string(r.scenario.mode);
    meta["spectrum_law"] = to_string(r.scenario.law);
    meta["dynamic_range"] = r.scenario.dynamic_range;
    meta["amplitude_exponent"] = r.scenario.amplitude_exponent;
    meta["crystallite_frame"] = to_string(MassFrame::rest);
    if (r.scenario.stated_mass_bracket_kg)
        meta["stated_mass_bracket_kg"] = {r.scenario.stated_mass_bracket_kg->first,
                                          r.scenario.stated_mass_bracket_kg->second};
    else
        meta["stated_mass_bracket_kg"] = nullptr;
    return meta;
}

Cell crossover_cell(const CrossoverReport& c) {
    if (c.classification == CrossoverClass::interior && c.index)
        return Cell::text(std::string("interior(i*=") + format_sci6(*c.index) + ")");
    return Cell::text(to_string(c.classification));
}

} // namespace

Report to_report(const ScenarioReport& report) {
    Report out;
    out.metadata = scenario_metadata(report);
    out.columns = scenario_columns();
    out.rows.reserve(report.rows.size());
    for (const ScenarioRow& r : report.rows) {
        out.rows.push_back({
            Cell::number(r.v0_m_per_s),
            Cell::number(r.v0_over_c),
            Cell::number(r.gamma),
            Cell::number(r.lambda_m),
            Cell::number(r.compton_m),
            Cell::number(r.delta_m_kg),
            Cell::number(r.amplitude_m),
            Cell::number(r.inerton_count),
            Cell::number(r.mean_inerton_mass_kg),
            Cell::number(r.crystallite_count),
            Cell::number(r.crystallite_mass_kg),
            crossover_cell(r.crossover),
            r.note.empty() ? Cell::none() : Cell::text(r.note),
        });
    }
    return out;
}

std::vector<ComparisonRow> compare_to_literature(const ScenarioReport& report,
                                                 const std::vector<LiteratureValue>& refs) {
    if (report.rows.empty()) throw config_error("cannot compare: scenario report has no rows");

    // Crystallite mass is rest-frame and velocity-independent.
    Quantity m_cr = kilograms(report.rows.front().crystallite_mass_kg);
    auto [lo_it, hi_it] =
        std::minmax_element(report.rows.begin(), report.rows.end(),
                            [](const ScenarioRow& a, const ScenarioRow& b) {
                                return a.mean_inerton_mass_kg < b.mean_inerton_mass_kg;
                            });
    Quantity mean_lo = kilograms(lo_it->mean_inerton_mass_kg);
    Quantity mean_hi = kilograms(hi_it->mean_inerton_mass_kg);
    Quantity geo_lo = geometric_mean_mass(m_cr, mean_lo);
    Quantity geo_hi = geometric_mean_mass(m_cr, mean_hi);

    std::vector<ComparisonRow> rows;
    rows.reserve(refs.size());
    for (const LiteratureValue& ref : refs) {
        ComparisonRow row;
        row.label = ref.label;
        row.reference_mass_kg = ref.mass.magnitude();
        row.crystallite_mass_kg = m_cr.magnitude();
        row.decades_vs_crystallite = decades_between(ref.mass, m_cr);
        row.mean_mass_min_kg = mean_lo.magnitude();
        row.decades_vs_mean_min = decades_between(ref.mass, mean_lo);
        row.mean_mass_max_kg = mean_hi.magnitude();
        row.decades_vs_mean_max = decades_between(ref.mass, mean_hi);
        row.geomean_low_kg = geo_lo.magnitude();
        row.decades_vs_geomean_low = decades_between(ref.mass, geo_lo);
        row.geomean_high_kg = geo_hi.magnitude();
        row.decades_vs_geomean_high = decades_between(ref.mass, geo_hi);
        rows.push_back(std::move(row));
    }
    return rows;
}

Report to_report(const ScenarioReport& report, const std::vector<ComparisonRow>& rows) {
    Report out;
    out.metadata = scenario_metadata(report);
    out.metadata["average_interpretation"] = "geometric mean (log-space midpoint)";
    out.columns = {
        "label",
        "reference_mass_kg",
        "crystallite_mass_kg",
        "decades_vs_crystallite",
        "mean_mass_min_kg",
        "decades_vs_mean_min",
        "mean_mass_max_kg",
        "decades_vs_mean_max",
        "geomean_crystallite_mean_min_kg",
        "decades_vs_geomean_min",
        "geomean_crystallite_mean_max_kg",
        "decades_vs_geomean_max",
    };
    for (const ComparisonRow& r : rows) {
        out.rows.push_back({
            Cell::text(r.label),
            Cell::number(r.reference_mass_kg),
            Cell::number(r.crystallite_mass_kg),
            Cell::number(r.decades_vs_crystallite),
            Cell::number(r.mean_mass_min_kg),
            Cell::number(r.decades_vs_mean_min),
            Cell::number(r.mean_mass_max_kg),
            Cell::number(r.decades_vs_mean_max),
            Cell::number(r.geomean_low_kg),
            Cell::number(r.decades_vs_geomean_low),
            Cell::number(r.geomean_high_kg),
            Cell::number(r.decades_vs_geomean_high),
        });
    }
    return out;
}

} // namespace inerton
