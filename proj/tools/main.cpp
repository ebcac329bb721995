// Command-line front end: single-point kinematics/crystallite/cloud rows,
// scenario sweeps, and literature comparisons, in csv/json/table form.

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "inerton/cloud.hpp"
#include "inerton/crystallite.hpp"
#include "inerton/literature.hpp"
#include "inerton/scenario.hpp"
#include "inerton/units.hpp"

namespace {

using namespace inerton;

struct GlobalOptions {
    std::string constants_path;
    std::string format = "table";
    bool format_explicit = false;
    std::string de_broglie = "relativistic";
    bool de_broglie_explicit = false;
    std::string out_path;
};

Constants load_constants(const GlobalOptions& g) {
    return g.constants_path.empty() ? Constants::codata() : load_constants_file(g.constants_path);
}

/// Positional particle argument: preset name, or an explicit rest mass
/// written as a quantity ("9.1e-31 kg").
Particle resolve_particle(const std::string& text, const std::string& velocity_text,
                          const Constants& k) {
    Quantity velocity = parse_quantity(velocity_text, k);
    if (k.presets.count(text))
        return make_particle(k.preset(text), velocity, text, k);
    if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text[0])) ||
                          text[0] == '.' || text[0] == '-')) {
        Quantity mass = parse_quantity(text, k);
        require_same_dim(mass.dim(), dim::mass, "use as rest mass");
        return make_particle(mass, velocity, "custom", k);
    }
    // Reuse the preset error so the message lists the known names.
    k.preset(text);
    throw config_error("unreachable");
}

nlohmann::ordered_json base_metadata(const Constants& k) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    meta["tool"] = kToolName;
    meta["version"] = kToolVersion;
    meta["c_m_per_s"] = k.c.magnitude();
    meta["h_J_s"] = k.h.magnitude();
    return meta;
}

void write_output(const GlobalOptions& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw config_error("cannot open output file: " + g.out_path);
    out << text;
}

int run_particle(const GlobalOptions& g, const std::string& which, const std::string& velocity) {
    Constants k = load_constants(g);
    Particle p = resolve_particle(which, velocity, k);
    DeBroglieMode mode = de_broglie_mode_from_string(g.de_broglie);

    Report report;
    report.metadata = base_metadata(k);
    report.metadata["de_broglie"] = to_string(mode);
    report.columns = {"particle",       "rest_mass_kg", "v0_m_per_s",
                      "v0_over_c",      "gamma",        "relativistic_mass_kg",
                      "delta_m_kg",     "compton_m",    "lambda_m"};
    bool at_rest = p.velocity.magnitude() == 0.0;
    report.rows.push_back({
        Cell::text(p.name),
        Cell::number(p.rest_mass.magnitude()),
        Cell::number(p.velocity.magnitude()),
        Cell::number(p.velocity.magnitude() / k.c.magnitude()),
        Cell::number(lorentz_gamma(p, k).magnitude()),
        Cell::number(relativistic_mass(p, k).magnitude()),
        Cell::number(mass_excess(p, k).magnitude()),
        Cell::number(compton_wavelength(p, k).magnitude()),
        at_rest ? Cell::none() : Cell::number(de_broglie_wavelength(p, mode, k).magnitude()),
    });
    write_output(g, render(report, output_format_from_string(g.format)));
    return 0;
}

int run_crystallite(const GlobalOptions& g, const std::string& which,
                    const std::string& velocity, const std::string& edge_text,
                    const std::string& frame_text) {
    Constants k = load_constants(g);
    Particle p = resolve_particle(which, velocity, k);
    Quantity edge = parse_quantity(edge_text, k);
    MassFrame frame;
    if (frame_text == "rest")
        frame = MassFrame::rest;
    else if (frame_text == "relativistic")
        frame = MassFrame::relativistic;
    else
        throw config_error("unknown --frame \"" + frame_text + "\" (expected rest or relativistic)");

    CrystalliteReport coat = crystallite_report({p, edge, frame}, k);
    Report report;
    report.metadata = base_metadata(k);
    report.metadata["crystallite_frame"] = to_string(frame);
    report.columns = {"particle",   "rest_mass_kg",        "v0_m_per_s",
                      "compton_m",  "superparticle_edge_m", "crystallite_count",
                      "crystallite_mass_kg"};
    report.rows.push_back({
        Cell::text(p.name),
        Cell::number(p.rest_mass.magnitude()),
        Cell::number(p.velocity.magnitude()),
        Cell::number(coat.compton.magnitude()),
        Cell::number(edge.magnitude()),
        Cell::number(coat.superparticle_count.magnitude()),
        Cell::number(coat.superparticle_mass.magnitude()),
    });
    write_output(g, render(report, output_format_from_string(g.format)));
    return 0;
}

int run_cloud(const GlobalOptions& g, const std::string& which, const std::string& velocity,
              const std::string& edge_text, const std::string& law_text, double dynamic_range,
              double alpha, int samples) {
    Constants k = load_constants(g);
    Particle p = resolve_particle(which, velocity, k);
    CloudConfig cfg{p, parse_quantity(edge_text, k), de_broglie_mode_from_string(g.de_broglie),
                    spectrum_law_from_string(law_text), dynamic_range, alpha};

    EmissionSpectrum spec = build_spectrum(cfg, k);
    CrystalliteReport coat =
        crystallite_report({p, cfg.superparticle_edge, MassFrame::rest}, k);
    Quantity compton = compton_wavelength(p, k);
    CrossoverReport cross = crossover(spec, coat.superparticle_mass);

    Report report;
    report.metadata = base_metadata(k);
    report.metadata["particle"] = p.name;
    report.metadata["rest_mass_kg"] = p.rest_mass.magnitude();
    report.metadata["v0_m_per_s"] = p.velocity.magnitude();
    report.metadata["v0_over_c"] = p.velocity.magnitude() / k.c.magnitude();
    report.metadata["de_broglie"] = to_string(cfg.mode);
    report.metadata["gamma"] = lorentz_gamma(p, k).magnitude();
    report.metadata["lambda_m"] = de_broglie_wavelength(p, cfg.mode, k).magnitude();
    report.metadata["compton_m"] = compton.magnitude();
    report.metadata["delta_m_kg"] = spec.total_mass.magnitude();
    report.metadata["amplitude_m"] = cloud_amplitude(cfg, k).magnitude();
    report.metadata["inerton_count"] = spec.count;
    report.metadata["mean_inerton_mass_kg"] = spec.mean_mass.magnitude();
    report.metadata["spectrum_law"] = to_string(spec.law);
    report.metadata["dynamic_range"] = spec.dynamic_range;
    report.metadata["amplitude_exponent"] = cfg.amplitude_exponent;
    report.metadata["first_mass_kg"] = spec.first_mass.magnitude();
    report.metadata["last_mass_kg"] = spec.last_mass.magnitude();
    report.metadata["superparticle_edge_m"] = cfg.superparticle_edge.magnitude();
    report.metadata["crystallite_count"] = coat.superparticle_count.magnitude();
    report.metadata["crystallite_mass_kg"] = coat.superparticle_mass.magnitude();
    if (cross.classification == CrossoverClass::interior)
        report.metadata["crossover"] = {{"classification", to_string(cross.classification)},
                                        {"index", *cross.index}};
    else
        report.metadata["crossover"] = {{"classification", to_string(cross.classification)}};

    report.columns = {"index", "inerton_mass_kg", "inerton_amplitude_m"};
    for (double i : log_sample_indices(spec.count, samples)) {
        report.rows.push_back({
            Cell::number(i),
            Cell::number(mass_at(spec, i).magnitude()),
            Cell::number(inerton_amplitude(spec, i, coat.superparticle_mass, compton,
                                           cfg.amplitude_exponent)
                             .magnitude()),
        });
    }
    write_output(g, render(report, output_format_from_string(g.format)));
    return 0;
}

int run_sweep(const GlobalOptions& g, const std::string& scenario_ref) {
    Constants k = load_constants(g);
    Scenario s = load_scenario(scenario_ref, k);
    if (g.de_broglie_explicit) s.mode = de_broglie_mode_from_string(g.de_broglie);
    ScenarioReport report = run_scenario(s, k);
    OutputFormat format =
        g.format_explicit ? output_format_from_string(g.format) : s.format;
    write_output(g, render(to_report(report), format));
    return 0;
}

int run_compare(const GlobalOptions& g, const std::string& scenario_ref,
                const std::string& refs_path) {
    Constants k = load_constants(g);
    Scenario s = load_scenario(scenario_ref, k);
    if (g.de_broglie_explicit) s.mode = de_broglie_mode_from_string(g.de_broglie);
    ScenarioReport report = run_scenario(s, k);
    std::vector<LiteratureValue> refs =
        refs_path.empty() ? default_literature() : load_literature_file(refs_path);
    Report out = to_report(report, compare_to_literature(report, refs));
    OutputFormat format = g.format_explicit ? output_format_from_string(g.format)
                                            : OutputFormat::table;
    write_output(g, render(out, format));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inerton mass model: kinematics, crystallite counting, emission spectra,"
                 " scenario sweeps and literature comparison"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    GlobalOptions g;
    app.add_option("--constants", g.constants_path, "JSON file overriding c, h and presets");
    auto* format_opt =
        app.add_option("--format", g.format, "output format: csv, json or table");
    auto* mode_opt =
        app.add_option("--de-broglie", g.de_broglie, "momentum convention: rel or nonrel");
    app.add_option("--out", g.out_path, "write output to a file instead of stdout");

    std::string which, velocity = "0 m/s", edge = "1e-30 m";
    std::string frame = "rest", law = "geometric", scenario_ref, refs_path;
    double dynamic_range = 1e3, alpha = 1.0;
    int samples = 64;

    auto* particle_cmd = app.add_subcommand("particle", "relativistic kinematics of one particle");
    particle_cmd->add_option("particle", which, "preset name or rest mass (e.g. \"9.1e-31 kg\")")
        ->required();
    particle_cmd->add_option("--velocity", velocity, "velocity quantity (default \"0 m/s\")");
    particle_cmd->fallthrough();

    auto* crystallite_cmd =
        app.add_subcommand("crystallite", "superparticle count and mass of the deformation coat");
    crystallite_cmd->add_option("particle", which, "preset name or rest mass")->required();
    crystallite_cmd->add_option("--velocity", velocity, "velocity quantity (default \"0 m/s\")");
    crystallite_cmd->add_option("--edge", edge, "superparticle edge length (default \"1e-30 m\")");
    crystallite_cmd->add_option("--frame", frame, "coat mass frame: rest or relativistic");
    crystallite_cmd->fallthrough();

    auto* cloud_cmd =
        app.add_subcommand("cloud", "emission spectrum summary with sampled inertons");
    cloud_cmd->add_option("particle", which, "preset name or rest mass")->required();
    cloud_cmd->add_option("--velocity", velocity, "velocity quantity")->required();
    cloud_cmd->add_option("--edge", edge, "superparticle edge length (default \"1e-30 m\")");
    cloud_cmd->add_option("--law", law, "spectrum law: geometric, linear or uniform");
    cloud_cmd->add_option("--dynamic-range", dynamic_range, "m1/mN ratio, >= 1 (default 1e3)");
    cloud_cmd->add_option("--alpha", alpha, "amplitude exponent, > 0 (default 1)");
    cloud_cmd->add_option("--samples", samples, "log-grid sample count (default 64)");
    cloud_cmd->fallthrough();

    auto* sweep_cmd = app.add_subcommand("sweep", "run a scenario (builtin name or JSON file)");
    sweep_cmd->add_option("--scenario", scenario_ref, "builtin scenario name or path")->required();
    sweep_cmd->fallthrough();

    auto* compare_cmd =
        app.add_subcommand("compare", "compare a scenario's masses against literature values");
    compare_cmd->add_option("--scenario", scenario_ref, "builtin scenario name or path")
        ->required();
    compare_cmd->add_option("--refs", refs_path, "JSON references file (default: built-in set)");
    compare_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    g.format_explicit = format_opt->count() > 0;
    g.de_broglie_explicit = mode_opt->count() > 0;

    try {
        if (*particle_cmd) return run_particle(g, which, velocity);
        if (*crystallite_cmd) return run_crystallite(g, which, velocity, edge, frame);
        if (*cloud_cmd)
            return run_cloud(g, which, velocity, edge, law, dynamic_range, alpha, samples);
        if (*sweep_cmd) return run_sweep(g, scenario_ref);
        if (*compare_cmd) return run_compare(g, scenario_ref, refs_path);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
