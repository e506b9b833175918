#include "zeno/bath.hpp"

#include <algorithm>
#include <cmath>

#include "zeno/errors.hpp"
#include "zeno/numeric.hpp"
#include "zeno/quadrature.hpp"

namespace zeno {

namespace {

// coth(x/2) = 1 + 2/(e^x - 1); exact at x = +inf, overflow-free, and accurate
// for small x where the direct cosh/sinh ratio would cancel.
double coth_half(double x) { return 1.0 + 2.0 / std::expm1(x); }

// arctan(x) - x without cancellation; odd series below |x| = 0.1 (terms
// through x^13, truncation below 1e-13 relative there).
double atan_minus_x(double x) {
  if (std::abs(x) >= 0.1) return std::atan(x) - x;
  const double x2 = x * x;
  double sum = 0.0;
  double power = x * x2;  // x^(2k+1), k starting at 1
  double sign = -1.0;
  for (int k = 1; k <= 6; ++k) {
    sum += sign * power / static_cast<double>(2 * k + 1);
    power *= x2;
    sign = -sign;
  }
  return sum;
}

struct Domain {
  double upper;
  std::int64_t panels;
};

// Panel width capped by both the integrand oscillation period (pi/tau) and
// the cutoff scale; upper limit far enough out that the exponential tail is
// below any tolerance in play.
Domain integration_domain(const OhmicBath& bath, double tau) {
  const double upper = bath.cutoff * std::max(40.0, 40.0 / (bath.cutoff * tau));
  const double width = std::min(std::acos(-1.0) / tau, bath.cutoff);
  // Clamp before the integer cast; the adaptive layer rejects anything above
  // its capacity cap with a proper diagnostic.
  const double count = std::min(std::ceil(upper / width), 1e18);
  return {upper, static_cast<std::int64_t>(count)};
}

}  // namespace

void validate(const OhmicBath& bath) {
  if (!(bath.coupling > 0.0) || std::isinf(bath.coupling))
    throw validation_error("bath coupling must be positive and finite");
  if (!(bath.cutoff > 0.0) || std::isinf(bath.cutoff))
    throw validation_error("bath cutoff must be positive and finite");
  if (!(bath.inverse_temperature > 0.0))
    throw validation_error("bath inverse temperature must be positive (inf allowed)");
}

double dephasing_exponent(const OhmicBath& bath, double tau) {
  validate(bath);
  if (!(tau >= 0.0) || std::isinf(tau)) throw validation_error("tau must be finite and >= 0");
  if (tau == 0.0) return 0.0;
  const double g = bath.coupling;
  const double wc = bath.cutoff;
  const double beta = bath.inverse_temperature;
  const double floor = 1e-6 * wc;
  // Small-w limit of the integrand: g tau^2 / beta thermally, 0 at zero
  // temperature. Substituted below the floor where sin^2 underflow and the
  // coth pole would otherwise collide.
  const double small_w = std::isinf(beta) ? 0.0 : g * tau * tau / beta;
  auto integrand = [&](double w) {
    if (w < floor) return small_w;
    const double s = std::sin(0.5 * w * tau);
    return g * std::exp(-w / wc) / w * 2.0 * s * s * coth_half(beta * w);
  };
  const Domain domain = integration_domain(bath, tau);
  const double value = integrate_adaptive(integrand, 0.0, domain.upper, domain.panels);
  return std::max(0.0, value);
}

double dephasing_exponent_zero_temperature(const OhmicBath& bath, double tau) {
  validate(bath);
  if (!(tau >= 0.0) || std::isinf(tau)) throw validation_error("tau must be finite and >= 0");
  const double x = bath.cutoff * tau;
  return 0.5 * bath.coupling * std::log1p(x * x);
}

double phase_shift(const OhmicBath& bath, double tau) {
  validate(bath);
  if (!(tau >= 0.0) || std::isinf(tau)) throw validation_error("tau must be finite and >= 0");
  return bath.coupling * atan_minus_x(bath.cutoff * tau);
}

double phase_shift_quadrature(const OhmicBath& bath, double tau) {
  validate(bath);
  if (!(tau >= 0.0) || std::isinf(tau)) throw validation_error("tau must be finite and >= 0");
  if (tau == 0.0) return 0.0;
  const double g = bath.coupling;
  const double wc = bath.cutoff;
  auto integrand = [&](double w) {
    return g * std::exp(-w / wc) * sin_minus_x(w * tau) / w;
  };
  const Domain domain = integration_domain(bath, tau);
  return integrate_adaptive(integrand, 0.0, domain.upper, domain.panels);
}

}  // namespace zeno
