#include <cmath>
#include <complex>
#include <cstdint>

#include <doctest.h>
#include <Eigen/Dense>

#include "oracles.hpp"
#include "zeno/chain.hpp"
#include "zeno/errors.hpp"
#include "zeno/models/large_spin.hpp"

using namespace zeno;

namespace {

constexpr double kPi = 3.14159265358979323846;

LargeSpinModel reference_model() {
  LargeSpinModel model;
  model.spin_magnitude = 1.0;
  model.level_splitting = 1.0;
  model.bath = OhmicBath{0.1, 10.0, 10.0};
  return model;
}

}  // namespace

TEST_CASE("triplet model validation") {
  CHECK_NOTHROW(validate(reference_model()));
  LargeSpinModel bad = reference_model();
  bad.spin_magnitude = 2.0;
  CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("spin magnitude 1"), validation_error);
  bad = reference_model();
  bad.bath.cutoff = -1.0;
  CHECK_THROWS_AS(validate(bad), validation_error);
}

TEST_CASE("hop probabilities match frozen references and limits") {
  CHECK(hop_near(0.2) == doctest::Approx(oracle::kTripletHopNear).epsilon(1e-15));
  CHECK(hop_far(0.2, 0.3) == doctest::Approx(oracle::kTripletHopFar).epsilon(1e-15));
  CHECK(hop_near(0.0) == 0.0);
  CHECK(hop_far(0.0, 0.0) == 0.0);
  CHECK(hop_near(400.0) == doctest::Approx(0.25).epsilon(1e-15));
  // Pure phase, no damping: the far hop reduces to (1 - cos delta)/2.
  const double delta = 1.1;
  const double expected = 0.5 * (1.0 - std::cos(delta));
  CHECK(hop_far(0.0, delta) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(hop_near(-0.1), validation_error);
}

TEST_CASE("stay weight identity holds across the factor grid") {
  for (const double gamma : {0.0, 1e-6, 0.01, 0.2, 1.0, 5.0}) {
    for (const double delta : {0.0, 1e-5, 0.3, 2.0, kPi}) {
      const double s01 = hop_near(gamma);
      const double s02 = hop_far(gamma, delta);
      const double contrast = std::cos(delta) * std::exp(-gamma);
      CHECK(1.0 - s01 - 2.0 * s02 == doctest::Approx(contrast).epsilon(1e-14));
      CHECK_NOTHROW(validate_transitions(TransitionSet{3, s01, s02}));
    }
  }
}

TEST_CASE("selective survival and the printed variant") {
  CHECK(selective_survival(0.0, 0.0) == 1.0);
  CHECK(selective_survival(0.3, 0.7) ==
        doctest::Approx(1.0 - hop_near(0.3) - hop_far(0.3, 0.7)).epsilon(1e-15));

  // The variant with weight 4 on the fast-decaying term evaluates to 11/8 at
  // zero dephasing, so it cannot be a survival probability; it is kept as a
  // diagnostic only.
  const double at_zero = selective_survival_alt(0.0, 0.0);
  CHECK(at_zero == doctest::Approx(1.375).epsilon(1e-15));
  MESSAGE("printed variant at zero dephasing evaluates to ", at_zero,
          " (> 1), production uses the re-derived form");
  for (const double gamma : {0.0, 0.2, 1.0}) {
    for (const double delta : {0.0, 0.4, 2.0}) {
      const double gap = selective_survival_alt(gamma, delta) - selective_survival(gamma, delta);
      CHECK(gap == doctest::Approx(3.0 * std::exp(-4.0 * gamma) / 8.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("transverse projectors resolve the identity") {
  const Eigen::Matrix3cd p_plus = level_projector(1);
  const Eigen::Matrix3cd p_zero = level_projector(0);
  const Eigen::Matrix3cd p_minus = level_projector(-1);
  const Eigen::Matrix3cd sum = p_plus + p_zero + p_minus;
  CHECK((sum - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  for (const Eigen::Matrix3cd& p : {p_plus, p_zero, p_minus}) {
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(p.trace() - std::complex<double>(1.0, 0.0)) < 1e-15);
  }
  CHECK((p_plus * p_zero).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((p_plus * p_minus).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((p_zero * p_minus).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(level_projector(2), validation_error);
}

TEST_CASE("generic dephasing overlap reproduces the closed hops") {
  const Eigen::Matrix3cd p_plus = level_projector(1);
  const Eigen::Matrix3cd p_zero = level_projector(0);
  const Eigen::Matrix3cd p_minus = level_projector(-1);
  for (const double gamma : {0.0, 0.05, 0.4, 1.5}) {
    for (const double delta : {0.0, 0.3, 1.2, 2.8}) {
      CHECK(transition_overlap(p_plus, p_zero, gamma, delta) ==
            doctest::Approx(hop_near(gamma)).epsilon(1e-12));
      CHECK(transition_overlap(p_plus, p_minus, gamma, delta) ==
            doctest::Approx(hop_far(gamma, delta)).epsilon(1e-12));
      CHECK(transition_overlap(p_plus, p_plus, gamma, delta) ==
            doctest::Approx(selective_survival(gamma, delta)).epsilon(1e-12));
    }
  }
}

TEST_CASE("overlap input validation") {
  const Eigen::Matrix3cd p_plus = level_projector(1);

  Eigen::Matrix3cd skew = Eigen::Matrix3cd::Zero();
  skew.diagonal() << 0.5, 0.5, 0.0;
  skew(0, 1) = std::complex<double>(0.0, 0.3);
  skew(1, 0) = std::complex<double>(0.0, 0.3);
  CHECK_THROWS_WITH_AS(transition_overlap(skew, p_plus, 0.1, 0.1),
                       doctest::Contains("Hermitian"), validation_error);

  const Eigen::Matrix3cd half = 0.5 * Eigen::Matrix3cd::Identity();
  CHECK_THROWS_WITH_AS(transition_overlap(half, p_plus, 0.1, 0.1),
                       doctest::Contains("unit trace"), validation_error);

  Eigen::Matrix3cd indefinite = Eigen::Matrix3cd::Zero();
  indefinite.diagonal() << 2.0, -1.0, 0.0;
  CHECK_THROWS_WITH_AS(transition_overlap(indefinite, p_plus, 0.1, 0.1),
                       doctest::Contains("semidefinite"), validation_error);

  const Eigen::MatrixXcd qubit = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(transition_overlap(qubit, p_plus, 0.1, 0.1), validation_error);
}

TEST_CASE("dephasing map damps coherences by spread and phase") {
  const double gamma = 0.35;
  const double delta = 0.8;

  // Two-level check: the single coherence spans (l - m) = 1 and picks up no
  // phase because l^2 == m^2 at +-1/2.
  Eigen::MatrixXcd plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const Eigen::MatrixXcd damped = dephase(plus, gamma, delta);
  CHECK(std::abs(damped(0, 0) - std::complex<double>(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(damped(0, 1) - std::complex<double>(0.5 * std::exp(-gamma), 0.0)) < 1e-15);

  const std::complex<double> corner = dephased_element({0.2, 0.0}, 1.0, -1.0, gamma, delta);
  CHECK(std::abs(corner - std::complex<double>(0.2 * std::exp(-4.0 * gamma), 0.0)) < 1e-15);
  const std::complex<double> edge = dephased_element({0.2, 0.0}, 1.0, 0.0, gamma, delta);
  CHECK(std::abs(edge - 0.2 * std::polar(std::exp(-gamma), -delta)) < 1e-15);

  CHECK_THROWS_AS(dephase(Eigen::MatrixXcd::Zero(2, 3), gamma, delta), validation_error);
}

TEST_CASE("factor rates agree with the chain composition") {
  struct FactorCase {
    double gamma;
    double delta;
  };
  // The last pair drives cos(delta) negative, so odd powers flip sign.
  for (const FactorCase c : {FactorCase{0.05, 0.1}, FactorCase{0.4, 0.9}, FactorCase{0.1, 2.5}}) {
    const TransitionSet t{3, hop_near(c.gamma), hop_far(c.gamma, c.delta)};
    const TransitionKernel kernel = TransitionKernel::from_transitions(t);
    for (const double tau : {0.2, 1.0}) {
      for (const std::uint64_t steps : {std::uint64_t{1}, std::uint64_t{3}, std::uint64_t{10}}) {
        for (const MeasurementKind kind :
             {MeasurementKind::selective, MeasurementKind::nonselective}) {
          const double direct = rate_from_factors(c.gamma, c.delta, tau, steps, kind);
          const double chained = protocol_rate(t, kind, steps, tau);
          CHECK(direct == doctest::Approx(chained).epsilon(1e-12));
          if (kind == MeasurementKind::nonselective) {
            const double matrix =
                effective_decay_rate(survival_matrix_power(kernel, steps), steps, tau);
            CHECK(direct == doctest::Approx(matrix).epsilon(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("model rates compose bath factors and chain consistently") {
  const LargeSpinModel model = reference_model();
  for (const double tau : {0.1, 0.7, 2.0}) {
    const TransitionSet t = transitions(model, tau);
    CHECK(t.dim == 3);
    CHECK_NOTHROW(validate_transitions(t));
    for (const std::uint64_t steps : {std::uint64_t{1}, std::uint64_t{5}}) {
      for (const MeasurementKind kind :
           {MeasurementKind::selective, MeasurementKind::nonselective}) {
        const double direct = direct_decay_rate(model, tau, steps, kind);
        const double chained = protocol_rate(t, kind, steps, tau);
        CHECK(direct == doctest::Approx(chained).epsilon(1e-12));
      }
    }
    const double ns1 = direct_decay_rate(model, tau, 1, MeasurementKind::nonselective);
    const double sel = direct_decay_rate(model, tau, 1, MeasurementKind::selective);
    CHECK(ns1 == doctest::Approx(sel).epsilon(1e-14));
  }
}
