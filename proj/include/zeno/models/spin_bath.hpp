#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "zeno/chain.hpp"

namespace zeno {

// Central two-level system (bias eps, tunneling Delta) coupled by
// sigma_z sigma_z terms to bath_size environment spins, each with its own
// level splitting and coupling; a single entry in either list means the value
// is uniform across the bath. Measurements project onto the central spin's
// initial up state; the bath starts thermal at inverse_temperature.
struct SpinBathModel {
  double bias = 1.0;
  double tunneling = 2.0;
  double inverse_temperature = 10.0;
  int bath_size = 1;
  std::vector<double> bath_levels = {1.0};     // size 1 (uniform) or bath_size
  std::vector<double> bath_couplings = {0.0};  // size 1 (uniform) or bath_size

  [[nodiscard]] bool uniform() const {
    return bath_levels.size() <= 1 && bath_couplings.size() <= 1;
  }
  [[nodiscard]] double level_of(int spin) const {
    return bath_levels.size() <= 1 ? bath_levels.front() : bath_levels[spin];
  }
  [[nodiscard]] double coupling_of(int spin) const {
    return bath_couplings.size() <= 1 ? bath_couplings.front() : bath_couplings[spin];
  }
};

// Hard cap on exact enumeration width; 2^14 configurations keep the exact
// route well under a second while covering every cross-check that needs it.
inline constexpr int kMaxExactBathSpins = 14;

// Throws validation_error for bad ranges (bath_size >= 1, finite parameters,
// finite positive inverse_temperature, list sizes in {1, bath_size}).
// Non-uniform baths are served only by exact enumeration, so bath_size above
// kMaxExactBathSpins with per-spin lists raises capacity_error.
void validate(const SpinBathModel& model);

// One environment configuration class: the central spin precesses about a
// tilted field with shifted bias zeta = bias + coupling_sum at angular
// frequency omega = sqrt(zeta^2 + tunneling^2)/2. omega_sq = omega * omega is
// stored unsquared-then-squared so tau = 0 reproduces the initial Bloch
// vector exactly. The statistical weight splits into the Boltzmann part and
// the degeneracy part so the exact enumeration (multiplicity 1) and the
// degeneracy collapse share one evaluator.
struct BathTerm {
  double level_sum = 0.0;     // total bath splitting energy of the class
  double coupling_sum = 0.0;  // net coupling shift acting on the central spin
  double shifted_bias = 0.0;
  double omega = 0.0;
  double omega_sq = 0.0;
  double log_boltzmann = 0.0;     // -beta * level_sum / 2
  double log_multiplicity = 0.0;  // ln of the class degeneracy

  [[nodiscard]] double log_weight() const { return log_boltzmann + log_multiplicity; }
};

// Uniform bath only: the 2^N configurations collapse into bath_size + 1
// classes indexed by the number of down spins, with binomial multiplicities
// kept in log form. Throws validation_error for non-uniform baths.
std::vector<BathTerm> collapse_uniform_bath(const SpinBathModel& model);

// All 2^bath_size configurations, one term each (log_multiplicity == 0).
// Supports per-spin lists; bath_size capped at kMaxExactBathSpins.
std::vector<BathTerm> enumerate_bath_exact(const SpinBathModel& model);

// ln of the bath partition sum over the given terms (log-sum-exp, shift by
// the maximum log weight so N = 100 at low temperature stays finite).
double log_partition(std::span<const BathTerm> terms);

// Thermally averaged Bloch vector of the central spin after free evolution
// for tau, as weighted sums over the terms:
//   p_x ~ (zeta^2 cos(2 omega tau) + tunneling^2) / (4 omega^2),
//   p_y ~ zeta sin(2 omega tau) / (2 omega),
//   p_z ~ tunneling zeta sin^2(omega tau) / (2 omega^2).
// Frozen classes (omega == 0, tunneling == 0) contribute (1, 0, 0).
std::array<double, 3> bloch_from_terms(std::span<const BathTerm> terms, double tunneling,
                                       double tau);

// Production dispatch: degeneracy collapse for uniform baths, exact
// enumeration otherwise.
std::array<double, 3> bloch_coefficients(const SpinBathModel& model, double tau);

// Uncoupled reference: unit Bloch vector of the bare central spin,
//   n_x = cos^2(W tau) + sin^2(W tau)(D^2 - e^2)/(4 W^2),
//   n_y = (e / W) sin(W tau) cos(W tau),
//   n_z = e D sin^2(W tau) / (2 W^2),
// with W = sqrt(e^2 + D^2)/2. (e, D) = (0, 0) raises validation_error.
std::array<double, 3> free_rotation_coefficients(double bias, double tunneling, double tau);

// One-period transition set, s01 = s10 = (1 - p . n)/2 (dim == 2).
// A dot product outside [-1, 1] by more than 1e-10 raises numerical_error;
// smaller dust is clamped.
TransitionSet transitions(const SpinBathModel& model, double tau);

// Rates straight from the analytic survival expressions (selective
// -ln[(1 + p.n)/2]/tau, non-selective -(1/(M tau)) ln[(1 + (p.n)^M)/2]);
// cross-check route against the chain composition.
double direct_decay_rate(const SpinBathModel& model, double tau, std::uint64_t steps,
                         MeasurementKind kind);

}  // namespace zeno
