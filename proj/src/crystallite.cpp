#include "inerton/crystallite.hpp"

namespace inerton {

const char* to_string(MassFrame f) {
    return f == MassFrame::rest ? "rest" : "relativistic";
}

namespace {

Quantity coat_mass(const CrystalliteModel& m, const Constants& k) {
    return m.frame == MassFrame::rest ? m.particle.rest_mass
                                      : relativistic_mass(m.particle, k);
}

Quantity coat_compton(const CrystalliteModel& m, const Constants& k) {
    return k.h / (coat_mass(m, k) * k.c);
}

} // namespace

Quantity superparticle_count(const CrystalliteModel& m, const Constants& k) {
    require_same_dim(m.superparticle_edge.dim(), dim::length, "use as superparticle edge");
    if (!(m.superparticle_edge.magnitude() > 0.0))
        throw numeric_error("superparticle edge must be > 0 (got " +
                            m.superparticle_edge.str() + ")");
    Quantity compton = coat_compton(m, k);
    if (m.superparticle_edge.magnitude() > compton.magnitude())
        throw numeric_error("superparticle larger than crystallite: edge " +
                            m.superparticle_edge.str() + " > Compton wavelength " +
                            compton.str());
    return pow_int(compton / m.superparticle_edge, 3);
}

Quantity superparticle_mass(const CrystalliteModel& m, const Constants& k) {
    return coat_mass(m, k) / superparticle_count(m, k);
}

CrystalliteReport crystallite_report(const CrystalliteModel& m, const Constants& k) {
    Quantity count = superparticle_count(m, k);
    return {coat_compton(m, k), count, coat_mass(m, k) / count};
}

} // namespace inerton
