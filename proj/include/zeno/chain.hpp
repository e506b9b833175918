#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace zeno {

// Measurement protocol flavor. Selective keeps only no-hop outcomes
// (survival decays as stay^M); non-selective keeps the full outcome mixture
// and survival is the return probability of the induced hopping chain.
enum class MeasurementKind { selective, nonselective };

std::string to_string(MeasurementKind kind);

// Per-interval hop probabilities of one measurement period. dim is the number
// of populated levels the chain tracks: 2 for the two-level models, 3 for the
// symmetric three-level ladder where s01 is the one-step hop and s02 the
// two-step hop out of the central level's neighbor structure.
struct TransitionSet {
  int dim = 2;
  double s01 = 0.0;
  double s02 = 0.0;  // meaningful only when dim == 3
};

// Throws validation_error unless the set describes a row-stochastic kernel
// (allowing 1e-12 roundoff dust below 0 / above the row bound).
void validate_transitions(const TransitionSet& t);

// One-period hopping kernel with derived diagonals. Construct from the
// off-diagonal hop matrix (diagonal entries must be exactly zero); each row's
// stay probability is 1 - sum of its hops. Entries outside [0,1] or row hop
// sums above 1 (beyond 1e-12 dust) are rejected.
class TransitionKernel {
 public:
  explicit TransitionKernel(const Eigen::MatrixXd& hops);

  static TransitionKernel two_level(double s01, double s10);
  // Symmetric ladder 0 <-> 1 <-> 2 with equal nearest hops s01 and direct
  // 0 <-> 2 hop s02; the middle row is (s01, 1 - 2 s01, s01).
  static TransitionKernel three_level_symmetric(double s01, double s02);
  static TransitionKernel from_transitions(const TransitionSet& t);

  [[nodiscard]] int dim() const { return static_cast<int>(matrix_.rows()); }
  [[nodiscard]] const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;  // full row-stochastic matrix
};

// Survival after M periods starting in level 0: the (0,0) entry of kernel^M,
// computed by binary exponentiation. Row sums are revalidated after every
// squaring; drift beyond 1e-9 raises numerical_error. M == 0 returns 1.
double survival_matrix_power(const TransitionKernel& kernel, std::uint64_t steps);

// Closed form for the asymmetric two-level chain,
//   S(M) = (s01 (1 - s01 - s10)^M + s10) / (s01 + s10),
// with the s01 = s10 = 0 limit handled exactly (returns 1). Requires
// s01, s10 in [0, 1].
double survival_two_level_closed(double s01, double s10, std::uint64_t steps);

// Binomial-expansion route for the same quantity,
//   S(M) = 1 - M s01 + s01 * sum_{k=1}^{M-1} (-1)^{k+1} C(M, k+1) (s01+s10)^k,
// accumulated in extended precision with exact integer binomials. Supported
// for M <= 64. Alternating terms reach ~C(64,32) when s01 + s10 <= 1, which
// extended precision absorbs to ~1e-13 absolute; accuracy degrades beyond
// that region. Diagnostic cross-check route, not the production path.
double survival_two_level_series(double s01, double s10, std::uint64_t steps);

// Closed form for the symmetric three-level ladder:
//   S(M) = (1/6) [2 + (1 - 3 s01)^M + 3 (1 - s01 - 2 s02)^M].
// Requires s01 >= 0, s02 >= 0, 2 s01 <= 1, s01 + s02 <= 1 (1e-12 dust
// tolerated), i.e. exactly the row-stochastic region of the kernel.
double survival_three_level(double s01, double s02, std::uint64_t steps);

// Effective decay rate -ln(S) / (M tau). survival == 1 returns +0.0;
// survival == 0 (or below) raises numerical_error carrying tau. Requires
// steps >= 1, tau > 0, survival <= 1 + 1e-12.
double effective_decay_rate(double survival, std::uint64_t steps, double tau);

// Selective (no-hop postselected) rate -ln(1 - s01) / tau via log1p.
// s01 == 1 raises numerical_error (infinite rate).
double selective_decay_rate(double s01, double tau);

// Survival of a full protocol: stay^M for selective, chain return probability
// for non-selective (closed two-level / three-level form by dim).
double protocol_survival(const TransitionSet& t, MeasurementKind kind, std::uint64_t steps);

// effective_decay_rate of protocol_survival; the M == 1 non-selective rate
// coincides with the selective rate by construction.
double protocol_rate(const TransitionSet& t, MeasurementKind kind, std::uint64_t steps,
                     double tau);

}  // namespace zeno
