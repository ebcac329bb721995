#include "inerton/kinematics.hpp"

#include <cmath>

namespace inerton {

const char* to_string(DeBroglieMode m) {
    return m == DeBroglieMode::relativistic ? "relativistic" : "nonrelativistic";
}

DeBroglieMode de_broglie_mode_from_string(const std::string& s) {
    if (s == "relativistic" || s == "rel") return DeBroglieMode::relativistic;
    if (s == "nonrelativistic" || s == "nonrel") return DeBroglieMode::nonrelativistic;
    throw config_error("unknown de Broglie mode \"" + s +
                       "\" (expected \"relativistic\"/\"rel\" or \"nonrelativistic\"/\"nonrel\")");
}

Particle make_particle(Quantity rest_mass, Quantity velocity, std::string name,
                       const Constants& k) {
    require_same_dim(rest_mass.dim(), dim::mass, "use as rest mass");
    require_same_dim(velocity.dim(), dim::velocity, "use as velocity");
    if (!(rest_mass.magnitude() > 0.0))
        throw numeric_error("rest mass must be > 0 (got " + rest_mass.str() + ")");
    if (velocity.magnitude() < 0.0)
        throw numeric_error("velocity must be >= 0 (got " + velocity.str() + ")");
    if (velocity.magnitude() >= k.c.magnitude())
        throw numeric_error("superluminal velocity: " + velocity.str() + " >= c = " + k.c.str());
    return Particle{rest_mass, velocity, std::move(name)};
}

double beta(const Particle& p, const Constants& k) {
    double b = p.velocity.magnitude() / k.c.magnitude();
    if (b >= 1.0)
        throw numeric_error("superluminal velocity: " + p.velocity.str() +
                            " >= c = " + k.c.str());
    if (b < 0.0) throw numeric_error("velocity must be >= 0 (got " + p.velocity.str() + ")");
    return b;
}

double lorentz_gamma_minus_one(double beta_value) {
    double b2 = beta_value * beta_value;
    double root = std::sqrt(1.0 - b2);
    return b2 / (root * (1.0 + root));
}

Quantity lorentz_gamma(const Particle& p, const Constants& k) {
    return scalar(1.0 + lorentz_gamma_minus_one(beta(p, k)));
}

Quantity relativistic_mass(const Particle& p, const Constants& k) {
    return p.rest_mass * (1.0 + lorentz_gamma_minus_one(beta(p, k)));
}

Quantity mass_excess(const Particle& p, const Constants& k) {
    return p.rest_mass * lorentz_gamma_minus_one(beta(p, k));
}

Quantity compton_wavelength(const Particle& p, const Constants& k) {
    Quantity m = p.velocity.magnitude() > 0.0 ? relativistic_mass(p, k) : p.rest_mass;
    return k.h / (m * k.c);
}

Quantity de_broglie_wavelength(const Particle& p, DeBroglieMode mode, const Constants& k) {
    if (p.velocity.magnitude() == 0.0)
        throw numeric_error("de Broglie wavelength undefined at rest (v0 = 0)");
    double b = beta(p, k);
    Quantity m = p.rest_mass;
    if (mode == DeBroglieMode::relativistic) m = m * (1.0 + lorentz_gamma_minus_one(b));
    return k.h / (m * p.velocity);
}

} // namespace inerton
