#include "zeno/models/spin_bath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zeno/errors.hpp"
#include "zeno/numeric.hpp"

namespace zeno {

namespace {

constexpr double kDotSlack = 1e-10;

void check_finite_list(const std::vector<double>& values, const char* name) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << name << " entries must be finite";
      throw validation_error(os.str());
    }
  }
}

BathTerm make_term(double level_sum, double coupling_sum, double bias, double tunneling,
                   double beta, double log_multiplicity) {
  BathTerm term;
  term.level_sum = level_sum;
  term.coupling_sum = coupling_sum;
  term.shifted_bias = bias + coupling_sum;
  // omega_sq first, omega from it, so cos^2 + sin^2 reconstructions at
  // tau = 0 cancel exactly against the stored square.
  term.omega_sq = (term.shifted_bias * term.shifted_bias + tunneling * tunneling) / 4.0;
  term.omega = std::sqrt(term.omega_sq);
  term.log_boltzmann = -0.5 * beta * level_sum;
  term.log_multiplicity = log_multiplicity;
  return term;
}

double max_log_weight(std::span<const BathTerm> terms) {
  double best = terms.front().log_weight();
  for (const BathTerm& t : terms) best = std::max(best, t.log_weight());
  return best;
}

}  // namespace

void validate(const SpinBathModel& model) {
  if (!std::isfinite(model.bias)) throw validation_error("central spin bias must be finite");
  if (!std::isfinite(model.tunneling))
    throw validation_error("central spin tunneling must be finite");
  if (!(model.inverse_temperature > 0.0) || std::isinf(model.inverse_temperature))
    throw validation_error("bath inverse temperature must be positive and finite");
  if (model.bath_size < 1) throw validation_error("bath size must be at least 1");
  if (model.bath_size > 100000) throw capacity_error("bath size above the 100000 cap");
  const auto list_ok = [&](const std::vector<double>& v) {
    return v.size() == 1 || v.size() == static_cast<std::size_t>(model.bath_size);
  };
  if (model.bath_levels.empty() || !list_ok(model.bath_levels))
    throw validation_error("bath level list must hold 1 or bath_size entries");
  if (model.bath_couplings.empty() || !list_ok(model.bath_couplings))
    throw validation_error("bath coupling list must hold 1 or bath_size entries");
  check_finite_list(model.bath_levels, "bath levels");
  check_finite_list(model.bath_couplings, "bath couplings");
  if (!model.uniform() && model.bath_size > kMaxExactBathSpins) {
    std::ostringstream os;
    os << "non-uniform bath lists are served by exact enumeration, which supports at most "
       << kMaxExactBathSpins << " spins (got " << model.bath_size << ")";
    throw capacity_error(os.str());
  }
}

std::vector<BathTerm> collapse_uniform_bath(const SpinBathModel& model) {
  validate(model);
  if (!model.uniform())
    throw validation_error("degeneracy collapse requires a uniform bath");
  const int n = model.bath_size;
  const double level = model.bath_levels.front();
  const double coupling = model.bath_couplings.front();
  std::vector<BathTerm> terms;
  terms.reserve(n + 1);
  double log_binom = 0.0;  // ln C(n, k), updated by the ratio recurrence
  for (int k = 0; k <= n; ++k) {
    const double net = static_cast<double>(n - 2 * k);  // sum of +-1 signs
    terms.push_back(make_term(net * level, net * coupling, model.bias, model.tunneling,
                              model.inverse_temperature, log_binom));
    if (k < n)
      log_binom += std::log(static_cast<double>(n - k) / static_cast<double>(k + 1));
  }
  return terms;
}

std::vector<BathTerm> enumerate_bath_exact(const SpinBathModel& model) {
  validate(model);
  if (model.bath_size > kMaxExactBathSpins) {
    std::ostringstream os;
    os << "exact enumeration supports at most " << kMaxExactBathSpins << " spins (got "
       << model.bath_size << ")";
    throw capacity_error(os.str());
  }
  const int n = model.bath_size;
  std::vector<BathTerm> terms;
  terms.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    double level_sum = 0.0;
    double coupling_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sign = (mask >> i) & 1u ? -1.0 : 1.0;
      level_sum += sign * model.level_of(i);
      coupling_sum += sign * model.coupling_of(i);
    }
    terms.push_back(make_term(level_sum, coupling_sum, model.bias, model.tunneling,
                              model.inverse_temperature, 0.0));
  }
  return terms;
}

double log_partition(std::span<const BathTerm> terms) {
  if (terms.empty()) throw validation_error("partition sum needs at least one term");
  const double shift = max_log_weight(terms);
  double sum = 0.0;
  for (const BathTerm& t : terms) sum += std::exp(t.log_weight() - shift);
  return shift + std::log(sum);
}

std::array<double, 3> bloch_from_terms(std::span<const BathTerm> terms, double tunneling,
                                       double tau) {
  if (terms.empty()) throw validation_error("Bloch average needs at least one term");
  const double shift = max_log_weight(terms);
  const double tt = tunneling * tunneling;
  double norm = 0.0;
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;
  for (const BathTerm& t : terms) {
    const double w = std::exp(t.log_weight() - shift);
    norm += w;
    if (t.omega == 0.0) {
      px += w;  // frozen class: no precession, Bloch vector stays at (1,0,0)
      continue;
    }
    const double zeta = t.shifted_bias;
    const double angle = t.omega * tau;
    const double s = std::sin(angle);
    px += w * (zeta * zeta * std::cos(2.0 * angle) + tt) / (4.0 * t.omega_sq);
    py += w * zeta * std::sin(2.0 * angle) / (2.0 * t.omega);
    pz += w * tunneling * zeta * s * s / (2.0 * t.omega_sq);
  }
  return {px / norm, py / norm, pz / norm};
}

std::array<double, 3> bloch_coefficients(const SpinBathModel& model, double tau) {
  validate(model);
  const std::vector<BathTerm> terms =
      model.uniform() ? collapse_uniform_bath(model) : enumerate_bath_exact(model);
  return bloch_from_terms(terms, model.tunneling, tau);
}

std::array<double, 3> free_rotation_coefficients(double bias, double tunneling, double tau) {
  if (!std::isfinite(bias) || !std::isfinite(tunneling))
    throw validation_error("free rotation parameters must be finite");
  const double freq_sq = (bias * bias + tunneling * tunneling) / 4.0;
  if (freq_sq == 0.0)
    throw validation_error("free rotation undefined for zero bias and zero tunneling");
  const double freq = std::sqrt(freq_sq);
  const double angle = freq * tau;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double nx = c * c + s * s * (tunneling * tunneling - bias * bias) / (4.0 * freq_sq);
  const double ny = (bias / freq) * s * c;
  const double nz = bias * tunneling * s * s / (2.0 * freq_sq);
  return {nx, ny, nz};
}

namespace {

double bloch_overlap(const SpinBathModel& model, double tau) {
  const std::array<double, 3> p = bloch_coefficients(model, tau);
  const std::array<double, 3> n = free_rotation_coefficients(model.bias, model.tunneling, tau);
  const double dot = p[0] * n[0] + p[1] * n[1] + p[2] * n[2];
  if (!(dot >= -1.0 - 2.0 * kDotSlack && dot <= 1.0 + 2.0 * kDotSlack)) {
    std::ostringstream os;
    os << "Bloch overlap " << dot << " left [-1, 1] at tau = " << tau;
    throw numerical_error(os.str());
  }
  return std::min(1.0, std::max(-1.0, dot));
}

}  // namespace

TransitionSet transitions(const SpinBathModel& model, double tau) {
  const double s01 = 0.5 * (1.0 - bloch_overlap(model, tau));
  if (!(s01 >= -kDotSlack && s01 <= 1.0 + kDotSlack)) {
    std::ostringstream os;
    os << "hop probability " << s01 << " left [0, 1] at tau = " << tau;
    throw numerical_error(os.str());
  }
  return TransitionSet{2, clamp01(s01), 0.0};
}

double direct_decay_rate(const SpinBathModel& model, double tau, std::uint64_t steps,
                         MeasurementKind kind) {
  const double dot = bloch_overlap(model, tau);
  if (kind == MeasurementKind::selective)
    return effective_decay_rate(clamp01(0.5 * (1.0 + dot)), 1, tau);
  if (steps == 0) throw validation_error("decay rate requires at least one period");
  const double survival = 0.5 * (1.0 + pow_int(dot, steps));
  return effective_decay_rate(clamp01(survival), steps, tau);
}

}  // namespace zeno
