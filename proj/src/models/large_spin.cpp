#include "zeno/models/large_spin.hpp"

#include <cmath>
#include <sstream>

#include "zeno/errors.hpp"
#include "zeno/numeric.hpp"

namespace zeno {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-10;
constexpr double kImagTolerance = 1e-10;

void check_density_matrix(const Eigen::MatrixXcd& rho, const char* name) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) {
    std::ostringstream os;
    os << name << " must be a square matrix";
    throw validation_error(os.str());
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    std::ostringstream os;
    os << name << " must be Hermitian";
    throw validation_error(os.str());
  }
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > kTraceTolerance) {
    std::ostringstream os;
    os << name << " must have unit trace";
    throw validation_error(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kTraceTolerance) {
    std::ostringstream os;
    os << name << " must be positive semidefinite";
    throw validation_error(os.str());
  }
}

void check_dephasing_factors(double gamma, double delta) {
  if (!(gamma >= 0.0)) throw validation_error("dephasing exponent must be >= 0");
  if (!std::isfinite(delta)) throw validation_error("phase shift must be finite");
}

}  // namespace

void validate(const LargeSpinModel& model) {
  if (model.spin_magnitude != 1.0)
    throw validation_error("survival closed forms support spin magnitude 1 only");
  if (!std::isfinite(model.level_splitting))
    throw validation_error("level splitting must be finite");
  validate(model.bath);
}

std::complex<double> dephased_element(std::complex<double> rho_lm, double l, double m,
                                      double gamma, double delta) {
  check_dephasing_factors(gamma, delta);
  const double spread = l - m;
  const double damping = std::exp(-gamma * spread * spread);
  const double phase = -delta * (l * l - m * m);
  return rho_lm * std::polar(damping, phase);
}

Eigen::MatrixXcd dephase(const Eigen::MatrixXcd& rho, double gamma, double delta) {
  check_dephasing_factors(gamma, delta);
  if (rho.rows() != rho.cols() || rho.rows() < 1)
    throw validation_error("dephasing needs a square matrix");
  const double j = 0.5 * static_cast<double>(rho.rows() - 1);
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
  for (Eigen::Index a = 0; a < rho.rows(); ++a) {
    const double l = j - static_cast<double>(a);
    for (Eigen::Index b = 0; b < rho.cols(); ++b) {
      const double m = j - static_cast<double>(b);
      out(a, b) = dephased_element(rho(a, b), l, m, gamma, delta);
    }
  }
  return out;
}

Eigen::Matrix3cd level_projector(int m) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Vector3cd v;
  switch (m) {
    case 1:
      v << 0.5, r, 0.5;
      break;
    case 0:
      v << r, 0.0, -r;
      break;
    case -1:
      v << 0.5, -r, 0.5;
      break;
    default:
      throw validation_error("transverse level must be -1, 0 or +1");
  }
  return v * v.adjoint();
}

double transition_overlap(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b,
                          double gamma, double delta) {
  check_density_matrix(rho_a, "initial state");
  check_density_matrix(rho_b, "target state");
  if (rho_a.rows() != rho_b.rows())
    throw validation_error("states must share one dimension");
  const std::complex<double> value = (rho_b * dephase(rho_a, gamma, delta)).trace();
  if (std::abs(value.imag()) > kImagTolerance) {
    std::ostringstream os;
    os << "transition probability kept an imaginary residue of " << value.imag();
    throw numerical_error(os.str());
  }
  return value.real();
}

double hop_near(double gamma) {
  check_dephasing_factors(gamma, 0.0);
  return clamp01(0.25 * -std::expm1(-4.0 * gamma));
}

double hop_far(double gamma, double delta) {
  check_dephasing_factors(gamma, delta);
  // 1 - cos(delta) e^{-gamma} split into (1 - e^{-gamma}) and
  // e^{-gamma} (1 - cos(delta)), both cancellation-free.
  const double half_sin = std::sin(0.5 * delta);
  const double one_minus = -std::expm1(-gamma) + std::exp(-gamma) * 2.0 * half_sin * half_sin;
  return clamp01(0.5 * one_minus - 0.5 * hop_near(gamma));
}

double selective_survival(double gamma, double delta) {
  return clamp01(1.0 - hop_near(gamma) - hop_far(gamma, delta));
}

double selective_survival_alt(double gamma, double delta) {
  check_dephasing_factors(gamma, delta);
  return (3.0 + 4.0 * std::exp(-4.0 * gamma) + 4.0 * std::cos(delta) * std::exp(-gamma)) / 8.0;
}

TransitionSet transitions(const LargeSpinModel& model, double tau) {
  validate(model);
  const double gamma = dephasing_exponent(model.bath, tau);
  const double delta = phase_shift(model.bath, tau);
  return TransitionSet{3, hop_near(gamma), hop_far(gamma, delta)};
}

double rate_from_factors(double gamma, double delta, double tau, std::uint64_t steps,
                         MeasurementKind kind) {
  check_dephasing_factors(gamma, delta);
  if (kind == MeasurementKind::selective)
    return effective_decay_rate(selective_survival(gamma, delta), 1, tau);
  if (steps == 0) throw validation_error("decay rate requires at least one period");
  const double ladder = 0.25 * (1.0 + 3.0 * std::exp(-4.0 * gamma));
  const double contrast = std::cos(delta) * std::exp(-gamma);
  const double survival =
      (2.0 + pow_int(ladder, steps) + 3.0 * pow_int(contrast, steps)) / 6.0;
  return effective_decay_rate(clamp01(survival), steps, tau);
}

double direct_decay_rate(const LargeSpinModel& model, double tau, std::uint64_t steps,
                         MeasurementKind kind) {
  validate(model);
  return rate_from_factors(dephasing_exponent(model.bath, tau), phase_shift(model.bath, tau),
                           tau, steps, kind);
}

}  // namespace zeno
