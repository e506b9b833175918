#include "zeno/chain.hpp"

#include <cmath>
#include <sstream>

#include "zeno/errors.hpp"
#include "zeno/numeric.hpp"

namespace zeno {

namespace {

constexpr double kDust = 1e-12;       // roundoff tolerance on validation bounds
constexpr double kDrift = 1e-9;       // stochasticity drift guard for matrix powers

void check_probability(double value, const char* name) {
  if (!(value >= -kDust && value <= 1.0 + kDust)) {
    std::ostringstream os;
    os << name << " = " << value << " is not a probability";
    throw validation_error(os.str());
  }
}

void check_row_stochastic(const Eigen::MatrixXd& m, double tolerance) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double entry = m(i, j);
      if (!(entry >= -tolerance && entry <= 1.0 + tolerance))
        throw numerical_error("matrix power drifted outside [0,1]");
      row += entry;
    }
    if (std::abs(row - 1.0) > tolerance)
      throw numerical_error("matrix power lost row stochasticity");
  }
}

}  // namespace

std::string to_string(MeasurementKind kind) {
  return kind == MeasurementKind::selective ? "selective" : "nonselective";
}

void validate_transitions(const TransitionSet& t) {
  if (t.dim != 2 && t.dim != 3) throw validation_error("transition set dimension must be 2 or 3");
  check_probability(t.s01, "s01");
  if (t.dim == 2) return;
  check_probability(t.s02, "s02");
  if (2.0 * t.s01 > 1.0 + kDust)
    throw validation_error("three-level middle row requires 2 s01 <= 1");
  if (t.s01 + t.s02 > 1.0 + kDust)
    throw validation_error("three-level outer rows require s01 + s02 <= 1");
}

TransitionKernel::TransitionKernel(const Eigen::MatrixXd& hops) {
  if (hops.rows() != hops.cols() || hops.rows() < 2)
    throw validation_error("transition kernel must be square with dim >= 2");
  Eigen::MatrixXd m = hops;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0.0)
      throw validation_error("transition kernel diagonals are derived; pass zeros");
    double row = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j) continue;
      check_probability(m(i, j), "hop probability");
      m(i, j) = clamp01(m(i, j));
      row += m(i, j);
    }
    if (row > 1.0 + kDust)
      throw validation_error("transition kernel row hops exceed 1");
    m(i, i) = clamp01(1.0 - row);
  }
  matrix_ = std::move(m);
}

TransitionKernel TransitionKernel::two_level(double s01, double s10) {
  Eigen::MatrixXd hops = Eigen::MatrixXd::Zero(2, 2);
  hops(0, 1) = s01;
  hops(1, 0) = s10;
  return TransitionKernel(hops);
}

TransitionKernel TransitionKernel::three_level_symmetric(double s01, double s02) {
  Eigen::MatrixXd hops = Eigen::MatrixXd::Zero(3, 3);
  hops(0, 1) = s01;
  hops(0, 2) = s02;
  hops(1, 0) = s01;
  hops(1, 2) = s01;
  hops(2, 0) = s02;
  hops(2, 1) = s01;
  return TransitionKernel(hops);
}

TransitionKernel TransitionKernel::from_transitions(const TransitionSet& t) {
  validate_transitions(t);
  return t.dim == 2 ? two_level(t.s01, t.s01) : three_level_symmetric(t.s01, t.s02);
}

double survival_matrix_power(const TransitionKernel& kernel, std::uint64_t steps) {
  const Eigen::Index n = kernel.matrix().rows();
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd base = kernel.matrix();
  std::uint64_t m = steps;
  while (m > 0) {
    if (m & 1u) result *= base;
    m >>= 1u;
    if (m > 0) {
      base *= base;
      check_row_stochastic(base, kDrift);
    }
  }
  check_row_stochastic(result, kDrift);
  return clamp01(result(0, 0));
}

double survival_two_level_closed(double s01, double s10, std::uint64_t steps) {
  check_probability(s01, "s01");
  check_probability(s10, "s10");
  const double total = s01 + s10;
  if (total == 0.0) return 1.0;
  const double decay = pow_int(1.0 - total, steps);
  return clamp01((s01 * decay + s10) / total);
}

double survival_two_level_series(double s01, double s10, std::uint64_t steps) {
  check_probability(s01, "s01");
  check_probability(s10, "s10");
  if (steps > static_cast<std::uint64_t>(kMaxBinomialRow))
    throw validation_error("series route supports at most 64 steps");
  const int m = static_cast<int>(steps);
  const quad total = static_cast<quad>(s01) + static_cast<quad>(s10);
  quad sum = 0;
  quad power = 1;  // total^k, built incrementally
  for (int k = 1; k <= m - 1; ++k) {
    power *= total;
    const quad term = static_cast<quad>(binomial(m, k + 1)) * power;
    sum += (k % 2 == 1) ? term : -term;
  }
  const quad survival =
      1 - static_cast<quad>(steps) * static_cast<quad>(s01) + static_cast<quad>(s01) * sum;
  return clamp01(static_cast<double>(survival));
}

double survival_three_level(double s01, double s02, std::uint64_t steps) {
  validate_transitions(TransitionSet{3, s01, s02});
  const double ladder = pow_int(1.0 - 3.0 * s01, steps);
  const double direct = pow_int(1.0 - s01 - 2.0 * s02, steps);
  return clamp01((2.0 + ladder + 3.0 * direct) / 6.0);
}

double effective_decay_rate(double survival, std::uint64_t steps, double tau) {
  if (steps == 0) throw validation_error("decay rate requires at least one period");
  if (!(tau > 0.0)) throw validation_error("decay rate requires tau > 0");
  if (!(survival <= 1.0 + kDust))
    throw validation_error("survival probability above 1");
  if (survival >= 1.0) return +0.0;
  if (!(survival > 0.0)) {
    std::ostringstream os;
    os << "survival vanished at tau = " << tau << "; rate is unbounded";
    throw numerical_error(os.str());
  }
  return -std::log(survival) / (static_cast<double>(steps) * tau);
}

double selective_decay_rate(double s01, double tau) {
  check_probability(s01, "s01");
  if (!(tau > 0.0)) throw validation_error("decay rate requires tau > 0");
  if (s01 >= 1.0) {
    std::ostringstream os;
    os << "hop probability reached 1 at tau = " << tau << "; selective rate is unbounded";
    throw numerical_error(os.str());
  }
  return -std::log1p(-s01) / tau;
}

double protocol_survival(const TransitionSet& t, MeasurementKind kind, std::uint64_t steps) {
  validate_transitions(t);
  if (kind == MeasurementKind::selective) {
    const double stay = t.dim == 2 ? 1.0 - t.s01 : 1.0 - t.s01 - t.s02;
    return pow_int(clamp01(stay), steps);
  }
  return t.dim == 2 ? survival_two_level_closed(t.s01, t.s01, steps)
                    : survival_three_level(t.s01, t.s02, steps);
}

double protocol_rate(const TransitionSet& t, MeasurementKind kind, std::uint64_t steps,
                     double tau) {
  return effective_decay_rate(protocol_survival(t, kind, steps), steps, tau);
}

}  // namespace zeno
