#pragma once

#include <string>

#include "inerton/constants.hpp"
#include "inerton/quantity.hpp"

namespace inerton {

/// Momentum convention for the matter wavelength. The model's arithmetic is
/// reproducible only to order of magnitude under either convention, so both
/// are first-class and every report records which one produced it.
enum class DeBroglieMode { nonrelativistic, relativistic };

const char* to_string(DeBroglieMode m);
DeBroglieMode de_broglie_mode_from_string(const std::string& s);

struct Particle {
    Quantity rest_mass; // kg, > 0
    Quantity velocity;  // m/s, 0 <= v < c
    std::string name;
};

/// Validates dimensions, rest_mass > 0 and 0 <= v < c. Velocity exactly 0
/// is allowed here; operations that are undefined at rest reject it
/// themselves.
Particle make_particle(Quantity rest_mass, Quantity velocity, std::string name,
                       const Constants& k);

/// v/c as a plain double; throws numeric_error("superluminal velocity")
/// for v >= c.
double beta(const Particle& p, const Constants& k);

/// gamma - 1 evaluated as beta^2 / (sqrt(1-beta^2) (1 + sqrt(1-beta^2))),
/// which keeps full relative precision down to beta ~ 1e-15 where the
/// naive 1/sqrt(1-beta^2) - 1 loses every digit.
double lorentz_gamma_minus_one(double beta_value);

Quantity lorentz_gamma(const Particle& p, const Constants& k);    // dimensionless, >= 1
Quantity relativistic_mass(const Particle& p, const Constants& k); // gamma * M0
Quantity mass_excess(const Particle& p, const Constants& k);       // M0 (gamma - 1)

/// h / (m c) with m the relativistic mass when the particle moves, the rest
/// mass when v = 0.
Quantity compton_wavelength(const Particle& p, const Constants& k);

/// h / (M0 v) or h / (gamma M0 v); undefined at rest.
Quantity de_broglie_wavelength(const Particle& p, DeBroglieMode mode, const Constants& k);

} // namespace inerton
