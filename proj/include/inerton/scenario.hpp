#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "inerton/cloud.hpp"
#include "inerton/crystallite.hpp"
#include "inerton/literature.hpp"
#include "inerton/report.hpp"

namespace inerton {

inline constexpr const char* kToolName = "inerton";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Spacing { linear, log };

const char* to_string(Spacing s);

struct SweepSpec {
    Quantity from; // m/s
    Quantity to;   // m/s, > from
    int points = 2;
    Spacing spacing = Spacing::log;
};

/// One scenario: a particle, a velocity (single point or sweep), and the
/// cloud/crystallite parameters. Loadable from JSON; unknown keys are
/// rejected with the offending key named.
struct Scenario {
    std::string name;
    std::optional<std::string> preset; // preset name, or explicit rest mass:
    std::optional<Quantity> rest_mass; // kg
    std::string particle_label;
    std::variant<Quantity, SweepSpec> velocity = meters_per_second(0.0);
    Quantity superparticle_edge = meters(1e-30);
    DeBroglieMode mode = DeBroglieMode::relativistic;
    SpectrumLaw law = SpectrumLaw::geometric;
    double dynamic_range = 1e3;
    double amplitude_exponent = 1.0;
    /// Mass range the source text claims for this setup; rows outside it
    /// get a note rather than an error (the tool audits, it does not agree).
    std::optional<std::pair<double, double>> stated_mass_bracket_kg;
    OutputFormat format = OutputFormat::table;
};

struct ScenarioRow {
    double v0_m_per_s = 0.0;
    double v0_over_c = 0.0;
    double gamma = 0.0;
    double lambda_m = 0.0;
    double compton_m = 0.0;
    double delta_m_kg = 0.0;
    double amplitude_m = 0.0;
    double inerton_count = 0.0;
    double mean_inerton_mass_kg = 0.0;
    double crystallite_count = 0.0;
    double crystallite_mass_kg = 0.0;
    CrossoverReport crossover{CrossoverClass::all_above, std::nullopt};
    std::string note;
};

struct ScenarioReport {
    Scenario scenario;
    Constants constants;
    std::vector<ScenarioRow> rows;
};

/// Fixed CSV column order; part of the output contract.
const std::vector<std::string>& scenario_columns();

Scenario parse_scenario_json(const std::string& json_text, const Constants& k);

/// Embedded one-command reproductions of the model's worked numbers,
/// keyed by name: paper-electron-sweep, paper-electron-crystallite,
/// paper-atom-in-solid.
const std::map<std::string, std::string>& builtin_scenarios();

/// Resolves a builtin name first, then a file path.
Scenario load_scenario(const std::string& name_or_path, const Constants& k);

/// Velocity grid in m/s, strictly ascending, endpoints exact.
std::vector<double> velocity_points_m_per_s(const Scenario& s);

/// Evaluates every velocity point. Points are independent pure
/// evaluations; with parallel=true they may run concurrently but rows and
/// errors are identical to the sequential run. Any failure is attributed
/// to its row with the offending velocity named.
ScenarioReport run_scenario(const Scenario& s, const Constants& k, bool parallel = true);

Particle scenario_particle(const Scenario& s, double v0_m_per_s, const Constants& k);

Report to_report(const ScenarioReport& report);

struct ComparisonRow {
    std::string label;
    double reference_mass_kg = 0.0;
    double crystallite_mass_kg = 0.0;
    double decades_vs_crystallite = 0.0;
    double mean_mass_min_kg = 0.0;
    double decades_vs_mean_min = 0.0;
    double mean_mass_max_kg = 0.0;
    double decades_vs_mean_max = 0.0;
    double geomean_low_kg = 0.0; // geometric mean of m_cr and min mean mass
    double decades_vs_geomean_low = 0.0;
    double geomean_high_kg = 0.0;
    double decades_vs_geomean_high = 0.0;
};

/// Decade distances between each reference and the report's crystallite
/// mass, mean-mass endpoints, and the geometric means of the two.
std::vector<ComparisonRow> compare_to_literature(const ScenarioReport& report,
                                                 const std::vector<LiteratureValue>& refs);

Report to_report(const ScenarioReport& report, const std::vector<ComparisonRow>& rows);

} // namespace inerton
