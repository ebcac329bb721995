#pragma once

#include <optional>
#include <vector>

#include "inerton/kinematics.hpp"

namespace inerton {

/// Decay law of the emitted masses. The model only demands monotone
/// decrease; geometric is the default because it has closed forms that stay
/// stable at N ~ 1e20. Uniform and linear exist for sensitivity analysis.
enum class SpectrumLaw { geometric, linear, uniform };

const char* to_string(SpectrumLaw law);
SpectrumLaw spectrum_law_from_string(const std::string& s);

struct CloudConfig {
    Particle particle;
    Quantity superparticle_edge = meters(1e-30);
    DeBroglieMode mode = DeBroglieMode::relativistic;
    SpectrumLaw law = SpectrumLaw::geometric;
    double dynamic_range = 1e3;      // r = m1/mN, >= 1
    double amplitude_exponent = 1.0; // alpha, > 0
};

/// Closed-form description of N monotone-decreasing inerton masses summing
/// to the relativistic mass excess. N is a positive real: counts are
/// volumetric ratios and the terms are never enumerated.
struct EmissionSpectrum {
    SpectrumLaw law; // law actually used (degenerate inputs fall back to uniform)
    double count;    // N >= 1
    Quantity total_mass; // delta M
    Quantity first_mass; // m1
    Quantity last_mass;  // mN = m1 / r
    double log_ratio;    // ln q (geometric), 0 otherwise
    Quantity decrement;  // d (linear), 0 kg otherwise
    Quantity mean_mass;  // delta M / N
    double dynamic_range;
};

enum class CrossoverClass { all_above, all_below, interior };

const char* to_string(CrossoverClass c);

/// Where the emitted masses cross the crystallite superparticle mass.
struct CrossoverReport {
    CrossoverClass classification;
    std::optional<double> index; // i*, present iff interior, 1 <= i* <= N
};

/// Lambda = lambda c / v0, the full extent of the cloud.
Quantity cloud_amplitude(const CloudConfig& cfg, const Constants& k);

/// N = lambda / l_sp, emissions per half de Broglie wavelength.
Quantity inerton_count(const CloudConfig& cfg, const Constants& k);

/// Mean emitted mass, delta M / N, on the cancellation-safe delta M path.
Quantity mean_inerton_mass(const CloudConfig& cfg, const Constants& k);

/// Core constructor from (N, delta M, law, r). The closed-form sum equals
/// total_mass in every law; geometric parameters are evaluated in log space
/// (expm1) so they survive N ~ 1e20. dynamic_range == 1 or N < 2 degrade
/// to the uniform law.
EmissionSpectrum build_spectrum(double count, Quantity total_mass, SpectrumLaw law,
                                double dynamic_range);
EmissionSpectrum build_spectrum(const CloudConfig& cfg, const Constants& k);

/// m_i for real index i in [1, N].
Quantity mass_at(const EmissionSpectrum& spec, double index);

/// Lambda_i = compton * (m_i / m_cr)^alpha: above the coat size exactly
/// while m_i exceeds the superparticle mass, below it after.
Quantity inerton_amplitude(const EmissionSpectrum& spec, double index,
                           const Quantity& crystallite_mass, const Quantity& compton,
                           double alpha);

CrossoverReport crossover(const EmissionSpectrum& spec, const Quantity& crystallite_mass);

/// Cloud mass along the particle path: emitted linearly over the first half
/// de Broglie wavelength, reabsorbed over the second, period lambda.
Quantity cloud_mass_profile(const CloudConfig& cfg, const Quantity& path_position,
                            const Constants& k);

/// Logarithmic index grid over [1, N] for tabulating huge spectra.
std::vector<double> log_sample_indices(double count, int samples = 64);

} // namespace inerton
