#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "zeno/bath.hpp"
#include "zeno/chain.hpp"

namespace zeno {

// Spin-1 system dephased in its energy eigenbasis by an Ohmic bath and probed
// by projections onto transverse-component eigenstates. spin_magnitude is
// fixed at 1: the survival chain closed forms below are specific to the
// three-level triplet. The dephasing map itself works for any dimension.
struct LargeSpinModel {
  double spin_magnitude = 1.0;
  double level_splitting = 1.0;
  OhmicBath bath;
};

void validate(const LargeSpinModel& model);

// One dephasing period applied to a single coherence: multiplies rho_lm by
// exp(-i delta (l^2 - m^2)) exp(-gamma (l - m)^2).
std::complex<double> dephased_element(std::complex<double> rho_lm, double l, double m,
                                      double gamma, double delta);

// Applies dephased_element to every entry of a density matrix written in the
// energy basis with magnetic numbers j, j-1, ..., -j down the diagonal
// (j inferred from the dimension).
Eigen::MatrixXcd dephase(const Eigen::MatrixXcd& rho, double gamma, double delta);

// Projector onto the transverse-component eigenstate with eigenvalue
// m in {-1, 0, +1}, written in the energy basis.
Eigen::Matrix3cd level_projector(int m);

// Transition probability tr[rho_b D(rho_a)] between two states under one
// dephasing period; the generic route the closed forms specialize.
// Throws validation_error unless both inputs are Hermitian density matrices
// (unit trace, positive semidefinite, matching dims); an imaginary residue
// above 1e-10 raises numerical_error.
double transition_overlap(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b,
                          double gamma, double delta);

// Closed-form hop probabilities between neighboring / opposite transverse
// levels after one period:
//   s01 = (1/4) (1 - e^{-4 gamma}),
//   s02 = (1/2) (1 - cos(delta) e^{-gamma}) - s01 / 2,
// the second arranged to avoid cancellation among near-unit exponentials.
double hop_near(double gamma);
double hop_far(double gamma, double delta);

// Survival of one selective (post-selected) period, 1 - s01 - s02. Algebra
// gives (1/8)[3 + e^{-4 gamma} + 4 cos(delta) e^{-gamma}].
double selective_survival(double gamma, double delta);

// Variant with coefficient 4 on the e^{-4 gamma} term that circulates in
// print; it exceeds 1 at gamma = delta = 0, so it is exposed for diagnostics
// only and is not used by any production path.
double selective_survival_alt(double gamma, double delta);

// One-period transition set at spacing tau (dim == 3).
TransitionSet transitions(const LargeSpinModel& model, double tau);

// Rates straight from the analytic survival expressions; non-selective uses
//   S(M) = (1/6) [2 + 4^{-M} (1 + 3 e^{-4 gamma})^M + 3 (cos(delta) e^{-gamma})^M].
// Cross-check route against the three-level chain composition.
double rate_from_factors(double gamma, double delta, double tau, std::uint64_t steps,
                         MeasurementKind kind);
double direct_decay_rate(const LargeSpinModel& model, double tau, std::uint64_t steps,
                         MeasurementKind kind);

}  // namespace zeno
