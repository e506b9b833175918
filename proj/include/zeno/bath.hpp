#pragma once

namespace zeno {

// Ohmic boson bath with exponential cutoff, J(w) = coupling * w * exp(-w/cutoff).
// inverse_temperature may be +infinity (zero-temperature mode, where the
// thermal factor is identically 1).
struct OhmicBath {
  double coupling = 0.1;
  double cutoff = 10.0;
  double inverse_temperature = 10.0;
};

// Throws validation_error unless coupling > 0, cutoff > 0 and
// inverse_temperature > 0 (finite or +infinity), all non-NaN.
void validate(const OhmicBath& bath);

// Dephasing exponent accumulated over one free interval of length tau:
//   gamma(tau) = int_0^inf dw J(w)/w^2 (1 - cos w tau) coth(beta w / 2).
// Production route: composite Gauss-Legendre panels (width capped at
// min(pi/tau, cutoff)) on [0, cutoff * max(40, 40/(cutoff tau))], doubled
// until 1e-9 relative agreement. tau == 0 returns 0. Result clamped at 0.
double dephasing_exponent(const OhmicBath& bath, double tau);

// Closed form of the same quantity at zero temperature,
//   (coupling/2) ln(1 + cutoff^2 tau^2); independent cross-check route.
double dephasing_exponent_zero_temperature(const OhmicBath& bath, double tau);

// Bath-induced phase accumulated over one free interval:
//   delta(tau) = coupling * (arctan(cutoff tau) - cutoff tau),
// evaluated without cancellation for small cutoff*tau. Production route.
double phase_shift(const OhmicBath& bath, double tau);

// Same phase via the spectral integral
//   int_0^inf dw J(w)/w^2 (sin w tau - w tau),
// on the gamma panel scheme. Cross-check route for phase_shift.
double phase_shift_quadrature(const OhmicBath& bath, double tau);

}  // namespace zeno
