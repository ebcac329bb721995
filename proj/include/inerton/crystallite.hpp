#pragma once

#include "inerton/kinematics.hpp"

namespace inerton {

/// Mass used for the deformation coat. The worked model example is a
/// nonrelativistic particle, so the rest frame is the default; the
/// relativistic variant is exposed for exploration.
enum class MassFrame { rest, relativistic };

const char* to_string(MassFrame f);

/// Compton-sized coat of mass-bearing cells around a particle, tiled by
/// cubic superparticles of the given edge length.
struct CrystalliteModel {
    Particle particle;
    Quantity superparticle_edge = meters(1e-30); // l_sp = V^(1/3)
    MassFrame frame = MassFrame::rest;
};

struct CrystalliteReport {
    Quantity compton;            // m; frame-dependent
    Quantity superparticle_count; // dimensionless, >= 1
    Quantity superparticle_mass;  // kg; count * mass == coat mass
};

/// (compton / edge)^3 as a positive real; counts are volumetric, never
/// rounded. Throws numeric_error when the edge exceeds the coat size
/// (count would drop below 1).
Quantity superparticle_count(const CrystalliteModel& m, const Constants& k);

/// Coat mass (particle mass in the chosen frame) divided by the count.
Quantity superparticle_mass(const CrystalliteModel& m, const Constants& k);

CrystalliteReport crystallite_report(const CrystalliteModel& m, const Constants& k);

} // namespace inerton
