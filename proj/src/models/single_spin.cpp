#include "zeno/models/single_spin.hpp"

#include <cmath>

#include "zeno/errors.hpp"
#include "zeno/numeric.hpp"

namespace zeno {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void validate(const SingleSpinModel& model) {
  if (!(model.polar_angle >= 0.0 && model.polar_angle <= kPi))
    throw validation_error("spin polar angle must lie in [0, pi]");
  if (!(model.azimuth_angle >= 0.0 && model.azimuth_angle < 2.0 * kPi))
    throw validation_error("spin azimuth angle must lie in [0, 2 pi)");
  if (!std::isfinite(model.level_splitting))
    throw validation_error("spin level splitting must be finite");
  validate(model.bath);
}

double hop_probability(const SingleSpinModel& model, double gamma) {
  if (!(gamma >= 0.0)) throw validation_error("dephasing exponent must be >= 0");
  const double s = std::sin(model.polar_angle);
  // -expm1(-gamma) = 1 - e^-gamma without cancellation for small gamma.
  return clamp01(0.5 * s * s * -std::expm1(-gamma));
}

TransitionSet transitions(const SingleSpinModel& model, double tau) {
  validate(model);
  return TransitionSet{2, hop_probability(model, dephasing_exponent(model.bath, tau)), 0.0};
}

double direct_decay_rate(const SingleSpinModel& model, double tau, std::uint64_t steps,
                         MeasurementKind kind) {
  const TransitionSet t = transitions(model, tau);
  if (kind == MeasurementKind::selective) return selective_decay_rate(t.s01, tau);
  if (steps == 0) throw validation_error("decay rate requires at least one period");
  const double survival = 0.5 * (1.0 + pow_int(1.0 - 2.0 * t.s01, steps));
  return effective_decay_rate(survival, steps, tau);
}

}  // namespace zeno
