#include "inerton/cloud.hpp"

#include <cmath>

namespace inerton {

const char* to_string(SpectrumLaw law) {
    switch (law) {
        case SpectrumLaw::geometric: return "geometric";
        case SpectrumLaw::linear: return "linear";
        case SpectrumLaw::uniform: return "uniform";
    }
    return "?";
}

SpectrumLaw spectrum_law_from_string(const std::string& s) {
    if (s == "geometric") return SpectrumLaw::geometric;
    if (s == "linear") return SpectrumLaw::linear;
    if (s == "uniform") return SpectrumLaw::uniform;
    throw config_error("unknown spectrum law \"" + s +
                       "\" (expected geometric, linear or uniform)");
}

const char* to_string(CrossoverClass c) {
    switch (c) {
        case CrossoverClass::all_above: return "all_above";
        case CrossoverClass::all_below: return "all_below";
        case CrossoverClass::interior: return "interior";
    }
    return "?";
}

Quantity cloud_amplitude(const CloudConfig& cfg, const Constants& k) {
    Quantity lambda = de_broglie_wavelength(cfg.particle, cfg.mode, k);
    return lambda * (k.c.magnitude() / cfg.particle.velocity.magnitude());
}

Quantity inerton_count(const CloudConfig& cfg, const Constants& k) {
    require_same_dim(cfg.superparticle_edge.dim(), dim::length, "use as superparticle edge");
    if (!(cfg.superparticle_edge.magnitude() > 0.0))
        throw numeric_error("superparticle edge must be > 0 (got " +
                            cfg.superparticle_edge.str() + ")");
    return de_broglie_wavelength(cfg.particle, cfg.mode, k) / cfg.superparticle_edge;
}

Quantity mean_inerton_mass(const CloudConfig& cfg, const Constants& k) {
    return mass_excess(cfg.particle, k) / inerton_count(cfg, k);
}

EmissionSpectrum build_spectrum(double count, Quantity total_mass, SpectrumLaw law,
                                double dynamic_range) {
    require_same_dim(total_mass.dim(), dim::mass, "use as emitted cloud mass");
    if (!(count >= 1.0) || !std::isfinite(count))
        throw numeric_error("inerton count must be >= 1 (got " + std::to_string(count) + ")");
    if (!(total_mass.magnitude() > 0.0))
        throw numeric_error("emitted cloud mass must be > 0 (got " + total_mass.str() + ")");
    if (!(dynamic_range >= 1.0) || !std::isfinite(dynamic_range))
        throw numeric_error("dynamic range must be >= 1 (got " +
                            std::to_string(dynamic_range) + ")");

    EmissionSpectrum s;
    s.count = count;
    s.total_mass = total_mass;
    s.mean_mass = total_mass / count;
    s.decrement = kilograms(0.0);
    s.log_ratio = 0.0;

    // A single inerton or a unit dynamic range leaves nothing to decay.
    if (dynamic_range == 1.0 || count < 2.0) law = SpectrumLaw::uniform;

    switch (law) {
        case SpectrumLaw::uniform:
            s.law = SpectrumLaw::uniform;
            s.dynamic_range = 1.0;
            s.first_mass = s.mean_mass;
            s.last_mass = s.mean_mass;
            break;
        case SpectrumLaw::geometric: {
            s.law = SpectrumLaw::geometric;
            s.dynamic_range = dynamic_range;
            // q = r^(-1/(N-1)); 1-q and 1-q^N via expm1 so m1 stays exact
            // when q is within an ulp of 1 (N ~ 1e20).
            double log_q = -std::log(dynamic_range) / (count - 1.0);
            double one_minus_q = -std::expm1(log_q);
            double one_minus_q_pow_n = -std::expm1(count * log_q);
            s.log_ratio = log_q;
            s.first_mass = total_mass * (one_minus_q / one_minus_q_pow_n);
            s.last_mass = s.first_mass / dynamic_range;
            break;
        }
        case SpectrumLaw::linear: {
            s.law = SpectrumLaw::linear;
            s.dynamic_range = dynamic_range;
            // m1 chosen so the arithmetic-series sum N (m1 + mN)/2 is exactly
            // the total mass, with mN = m1/r. The decrement goes through
            // (r-1)/r: the difference m1 - m1/r cancels for r near 1, while
            // r-1 is exact.
            s.first_mass = total_mass * (2.0 / count) * (dynamic_range / (dynamic_range + 1.0));
            s.last_mass = s.first_mass / dynamic_range;
            s.decrement =
                s.first_mass * ((dynamic_range - 1.0) / dynamic_range / (count - 1.0));
            break;
        }
    }
    return s;
}

EmissionSpectrum build_spectrum(const CloudConfig& cfg, const Constants& k) {
    if (!(cfg.amplitude_exponent > 0.0))
        throw numeric_error("amplitude exponent must be > 0 (got " +
                            std::to_string(cfg.amplitude_exponent) + ")");
    return build_spectrum(inerton_count(cfg, k).magnitude(), mass_excess(cfg.particle, k),
                          cfg.law, cfg.dynamic_range);
}

Quantity mass_at(const EmissionSpectrum& spec, double index) {
    if (!(index >= 1.0 && index <= spec.count))
        throw numeric_error("inerton index " + std::to_string(index) + " out of range [1, " +
                            std::to_string(spec.count) + "]");
    switch (spec.law) {
        case SpectrumLaw::uniform: return spec.mean_mass;
        case SpectrumLaw::geometric:
            return spec.first_mass * std::exp((index - 1.0) * spec.log_ratio);
        case SpectrumLaw::linear: return spec.first_mass - spec.decrement * (index - 1.0);
    }
    throw numeric_error("unreachable spectrum law");
}

Quantity inerton_amplitude(const EmissionSpectrum& spec, double index,
                           const Quantity& crystallite_mass, const Quantity& compton,
                           double alpha) {
    require_same_dim(crystallite_mass.dim(), dim::mass, "use as crystallite mass");
    require_same_dim(compton.dim(), dim::length, "use as Compton wavelength");
    if (!(alpha > 0.0))
        throw numeric_error("amplitude exponent must be > 0 (got " + std::to_string(alpha) + ")");
    if (!(crystallite_mass.magnitude() > 0.0))
        throw numeric_error("crystallite mass must be > 0 (got " + crystallite_mass.str() + ")");
    Quantity ratio = mass_at(spec, index) / crystallite_mass;
    return compton * std::pow(ratio.magnitude(), alpha);
}

CrossoverReport crossover(const EmissionSpectrum& spec, const Quantity& crystallite_mass) {
    require_same_dim(crystallite_mass.dim(), dim::mass, "use as crystallite mass");
    if (!(crystallite_mass.magnitude() > 0.0))
        throw numeric_error("crystallite mass must be > 0 (got " + crystallite_mass.str() + ")");
    double m_cr = crystallite_mass.magnitude();
    double first = spec.first_mass.magnitude();
    double last = spec.last_mass.magnitude();

    if (spec.law == SpectrumLaw::uniform) {
        // Flat spectrum: the tie m1 == m_cr counts as all_above.
        if (first >= m_cr) return {CrossoverClass::all_above, std::nullopt};
        return {CrossoverClass::all_below, std::nullopt};
    }
    if (last > m_cr) return {CrossoverClass::all_above, std::nullopt};
    if (first < m_cr) return {CrossoverClass::all_below, std::nullopt};

    double index = 1.0;
    if (spec.law == SpectrumLaw::geometric)
        index = 1.0 + (std::log(m_cr) - std::log(first)) / spec.log_ratio;
    else
        index = 1.0 + (first - m_cr) / spec.decrement.magnitude();
    index = std::min(std::max(index, 1.0), spec.count);
    return {CrossoverClass::interior, index};
}

Quantity cloud_mass_profile(const CloudConfig& cfg, const Quantity& path_position,
                            const Constants& k) {
    require_same_dim(path_position.dim(), dim::length, "use as path position");
    if (path_position.magnitude() < 0.0)
        throw numeric_error("path position must be >= 0 (got " + path_position.str() + ")");
    double lambda = de_broglie_wavelength(cfg.particle, cfg.mode, k).magnitude();
    Quantity delta_m = mass_excess(cfg.particle, k);
    double phase = std::fmod(path_position.magnitude(), lambda);
    double half = lambda / 2.0;
    double fraction = phase <= half ? phase / half : (lambda - phase) / half;
    return delta_m * fraction;
}

std::vector<double> log_sample_indices(double count, int samples) {
    if (!(count >= 1.0)) throw numeric_error("inerton count must be >= 1");
    if (samples < 1) throw config_error("sample count must be >= 1");
    if (count == 1.0 || samples == 1) return {1.0};
    std::vector<double> out;
    out.reserve(static_cast<size_t>(samples));
    double log_n = std::log(count);
    for (int i = 0; i < samples; ++i) {
        double idx = std::exp(log_n * static_cast<double>(i) / (samples - 1));
        if (i == 0) idx = 1.0;
        if (i == samples - 1) idx = count; // endpoints exact
        if (!out.empty() && idx <= out.back()) continue;
        out.push_back(idx);
    }
    return out;
}

} // namespace inerton
