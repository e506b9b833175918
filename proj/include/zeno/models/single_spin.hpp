#pragma once

#include <cstdint>

#include "zeno/bath.hpp"
#include "zeno/chain.hpp"

namespace zeno {

// Two-level system dephased by an Ohmic bath and probed by projections onto
// its initial Bloch direction. The initial state points along
// (polar_angle, azimuth_angle) on the Bloch sphere; after removal of the free
// phase (rotating frame at level_splitting) the measurement statistics depend
// on the polar angle only. azimuth_angle and level_splitting are kept as part
// of the preparation description and validated, nothing more.
struct SingleSpinModel {
  double polar_angle = 1.5707963267948966;  // in [0, pi]
  double azimuth_angle = 0.0;               // in [0, 2 pi)
  double level_splitting = 1.0;
  OhmicBath bath;
};

void validate(const SingleSpinModel& model);

// Symmetric hop probability for one period given the accumulated dephasing
// exponent: s01 = s10 = (1/2) sin^2(polar) (1 - e^-gamma).
double hop_probability(const SingleSpinModel& model, double gamma);

// One-period transition set at inter-measurement spacing tau (dim == 2).
TransitionSet transitions(const SingleSpinModel& model, double tau);

// Effective decay rate straight from the analytic survival expressions:
// selective uses -ln(1 - s01)/tau, non-selective
// -(1/(M tau)) ln[(1 + (1 - 2 s01)^M)/2]. Cross-check route against the
// chain composition; both must agree by construction of the symmetric chain.
double direct_decay_rate(const SingleSpinModel& model, double tau, std::uint64_t steps,
                         MeasurementKind kind);

}  // namespace zeno
