// Release gate: one verdict line per criterion, nonzero exit on any failure.
// Runs against the shipped presets plus frozen references in oracles.hpp.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "oracles.hpp"
#include "zeno/analysis.hpp"
#include "zeno/bath.hpp"
#include "zeno/chain.hpp"
#include "zeno/config.hpp"
#include "zeno/errors.hpp"
#include "zeno/models/large_spin.hpp"
#include "zeno/models/single_spin.hpp"
#include "zeno/models/spin_bath.hpp"
#include "zeno/output.hpp"
#include "zeno/presets.hpp"
#include "zeno/runner.hpp"
#include "zeno/scenario.hpp"

using namespace zeno;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double value) {
  std::ostringstream os;
  os.precision(3);
  os << value;
  return os.str();
}

std::vector<double> log_grid(double lo, double hi, int points) {
  GridSpec grid;
  grid.tau_min = lo;
  grid.tau_max = hi;
  grid.points = points;
  grid.spacing = GridSpacing::log;
  return grid.taus();
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

SpinBathModel fig2_model(double coupling) {
  SpinBathModel model;
  model.bias = 1.0;
  model.tunneling = 2.0;
  model.inverse_temperature = 10.0;
  model.bath_size = 100;
  model.bath_levels = {1.0};
  model.bath_couplings = {coupling};
  return model;
}

const SweepCurve* curve_for(const SweepResult& result, MeasurementKind kind,
                            std::uint64_t steps) {
  for (const SweepCurve& curve : result.curves) {
    if (curve.protocol.kind == kind && curve.protocol.steps == steps) return &curve;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------

Verdict criterion_two_level_routes() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> step_count(1, 64);
  constexpr int kCases = 10000;
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  int cases = 0;
  while (cases < kCases) {
    const double s01 = unit(rng);
    const double s10 = unit(rng);
    if (s01 + s10 > 1.0) continue;
    ++cases;
    const std::uint64_t m = step_count(rng);
    const double closed = survival_two_level_closed(s01, s10, m);
    const double series = survival_two_level_series(s01, s10, m);
    const double matrix = survival_matrix_power(TransitionKernel::two_level(s01, s10), m);
    worst = std::max({worst, std::abs(closed - series), std::abs(closed - matrix),
                      std::abs(series - matrix)});
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << kCases << " random kernels, M in [1,64]: max route spread " << fmt(worst)
     << " (tol 1e-10 abs), " << fmt(elapsed) << " s (budget 5 s)";
  return {worst <= kTol && elapsed < 5.0, os.str()};
}

Verdict criterion_three_level_routes() {
  const auto start = Clock::now();
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> step_count(1, 64);
  constexpr int kCases = 2000;
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  for (int i = 0; i < kCases; ++i) {
    const double s01 = 0.5 * unit(rng);
    const double s02 = (1.0 - s01) * unit(rng);
    const std::uint64_t m = step_count(rng);
    const double closed = survival_three_level(s01, s02, m);
    const double matrix =
        survival_matrix_power(TransitionKernel::three_level_symmetric(s01, s02), m);
    worst = std::max(worst, std::abs(closed - matrix));
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << kCases << " random three-level kernels, M in [1,64]: max |closed - matrix| "
     << fmt(worst) << " (tol 1e-12 abs), " << fmt(elapsed) << " s (budget 5 s)";
  return {worst <= kTol && elapsed < 5.0, os.str()};
}

Verdict criterion_bath_integral_oracles() {
  const auto start = Clock::now();
  constexpr double kGammaTol = 1e-6;
  constexpr double kPhaseTol = 1e-8;
  const double inf = std::numeric_limits<double>::infinity();
  double worst_gamma = 0.0;
  double worst_phase = 0.0;
  for (const double g : {0.1, 0.5}) {
    for (const double wc : {1.0, 10.0}) {
      const OhmicBath cold{g, wc, inf};
      for (const double tau : {0.01, 0.1, 1.0, 10.0}) {
        const double gq = dephasing_exponent(cold, tau);
        const double gc = dephasing_exponent_zero_temperature(cold, tau);
        worst_gamma = std::max(worst_gamma, std::abs(gq - gc) / std::abs(gc));
        const double dq = phase_shift_quadrature(cold, tau);
        const double dc = phase_shift(cold, tau);
        worst_phase = std::max(worst_phase, std::abs(dq - dc) / std::abs(dc));
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "16 (G, cutoff, tau) combinations: dephasing rel err " << fmt(worst_gamma)
     << " (tol 1e-6), phase rel err " << fmt(worst_phase) << " (tol 1e-8), " << fmt(elapsed)
     << " s (budget 10 s)";
  return {worst_gamma <= kGammaTol && worst_phase <= kPhaseTol && elapsed < 10.0, os.str()};
}

Verdict criterion_collapse_vs_enumeration() {
  const auto start = Clock::now();
  constexpr double kTol = 1e-12;
  const std::vector<double> taus = log_grid(0.02, 3.0, 20);
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (const double g : {0.01, 0.1}) {
      SpinBathModel model = fig2_model(g);
      model.bath_size = n;
      const std::vector<BathTerm> collapsed = collapse_uniform_bath(model);
      const std::vector<BathTerm> exact = enumerate_bath_exact(model);
      for (const double tau : taus) {
        const std::array<double, 3> free = free_rotation_coefficients(1.0, 2.0, tau);
        const double s_collapsed =
            0.5 * (1.0 - dot3(bloch_from_terms(collapsed, 2.0, tau), free));
        const double s_exact = 0.5 * (1.0 - dot3(bloch_from_terms(exact, 2.0, tau), free));
        worst = std::max(worst, std::abs(s_collapsed - s_exact));
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "N in [1,12], g in {0.01,0.1}, 20 tau points: max |s01 collapse - exact| "
     << fmt(worst) << " (tol 1e-12 abs), " << fmt(elapsed) << " s (budget 30 s)";
  return {worst <= kTol && elapsed < 30.0, os.str()};
}

Verdict criterion_hundred_spin_stability() {
  bool finite = true;
  std::string offender;
  for (const std::string id : {"fig2a", "fig2a_inset", "fig2b"}) {
    const RunConfig config = load_config(preset_path(id));
    const SweepResult result = run_sweep(config);
    for (const SweepCurve& curve : result.curves) {
      for (std::size_t i = 0; i < result.taus.size(); ++i) {
        if (!std::isfinite(curve.survival[i]) || !std::isfinite(curve.rate[i])) {
          finite = false;
          offender = id;
        }
      }
    }
  }

  const std::vector<BathTerm> terms = collapse_uniform_bath(fig2_model(0.01));
  const double log_z = log_partition(terms);
  const double z_err = std::abs(log_z - oracle::kLogPartition100) / oracle::kLogPartition100;

  double spot_err = 0.0;
  const std::array<std::array<double, 4>, 3> spots = {{
      {0.5, oracle::kBath100Tau05X, oracle::kBath100Tau05Y, oracle::kBath100Tau05Z},
      {1.5, oracle::kBath100Tau15X, oracle::kBath100Tau15Y, oracle::kBath100Tau15Z},
      {3.0, oracle::kBath100Tau30X, oracle::kBath100Tau30Y, oracle::kBath100Tau30Z},
  }};
  for (const auto& spot : spots) {
    const std::array<double, 3> p = bloch_from_terms(terms, 2.0, spot[0]);
    for (int k = 0; k < 3; ++k)
      spot_err = std::max(spot_err, std::abs(p[static_cast<std::size_t>(k)] - spot[static_cast<std::size_t>(k + 1)]));
  }

  std::ostringstream os;
  os << "fig2 presets finite" << (finite ? "" : " EXCEPT " + offender)
     << "; N=100 log partition rel err " << fmt(z_err)
     << " (tol 1e-10); Bloch spot max err " << fmt(spot_err) << " (tol 1e-12 abs)";
  return {finite && z_err <= 1e-10 && spot_err <= 1e-12, os.str()};
}

Verdict criterion_weak_coupling_overlap() {
  const RunConfig config = load_config(preset_path("fig2a_inset"));
  const auto* model = std::get_if<SpinBathModel>(&config.scenario);
  if (model == nullptr) return {false, "fig2a_inset preset is not a spin-bath model"};

  const std::vector<double> taus = log_grid(0.5, 3.0, 40);
  const std::array<std::pair<MeasurementKind, std::uint64_t>, 4> protocols = {{
      {MeasurementKind::selective, 1},
      {MeasurementKind::nonselective, 3},
      {MeasurementKind::nonselective, 5},
      {MeasurementKind::nonselective, 10},
  }};
  std::array<std::vector<double>, 4> rates;
  for (std::size_t c = 0; c < protocols.size(); ++c) {
    for (const double tau : taus) {
      const TransitionSet t = transitions(*model, tau);
      rates[c].push_back(protocol_rate(t, protocols[c].first, protocols[c].second, tau));
    }
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < rates.size(); ++a) {
    for (std::size_t b = a + 1; b < rates.size(); ++b) {
      for (std::size_t i = 0; i < taus.size(); ++i) {
        const double scale = std::max(std::abs(rates[a][i]), std::abs(rates[b][i]));
        worst = std::max(worst, std::abs(rates[a][i] - rates[b][i]) / scale);
      }
    }
  }
  std::ostringstream os;
  os << "selective and M in {3,5,10} on tau in [0.5,3]: max pairwise rel spread "
     << fmt(worst) << " (tol 0.02)";
  return {worst <= 0.02, os.str()};
}

Verdict criterion_rate_ordering() {
  const RunConfig config = load_config(preset_path("fig1b"));
  const SweepResult result = run_sweep(config);
  const std::array<const SweepCurve*, 4> curves = {
      curve_for(result, MeasurementKind::selective, 1),
      curve_for(result, MeasurementKind::nonselective, 3),
      curve_for(result, MeasurementKind::nonselective, 5),
      curve_for(result, MeasurementKind::nonselective, 10),
  };
  for (const SweepCurve* c : curves) {
    if (c == nullptr) return {false, "fig1b preset is missing an expected protocol"};
  }

  constexpr double kSlack = 1e-12;
  bool ordered = true;
  for (std::size_t i = 0; i < result.taus.size() && ordered; ++i) {
    for (std::size_t c = 0; c + 1 < curves.size(); ++c) {
      if (curves[c]->rate[i] < curves[c + 1]->rate[i] - kSlack) ordered = false;
    }
  }

  std::array<double, 4> peak_taus{};
  bool peaks_found = true;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const std::vector<RatePeak>& peaks = curves[c]->analysis.peaks;
    if (peaks.empty()) {
      peaks_found = false;
      continue;
    }
    const auto tallest = std::max_element(
        peaks.begin(), peaks.end(),
        [](const RatePeak& a, const RatePeak& b) { return a.rate < b.rate; });
    peak_taus[c] = tallest->tau;
  }
  bool peaks_ordered = peaks_found;
  for (std::size_t c = 0; peaks_ordered && c + 1 < peak_taus.size(); ++c) {
    if (peak_taus[c] < peak_taus[c + 1] - kSlack) peaks_ordered = false;
  }

  std::ostringstream os;
  os << "pointwise selective >= M=3 >= M=5 >= M=10: " << (ordered ? "holds" : "violated")
     << "; peak tau " << fmt(peak_taus[0]) << " >= " << fmt(peak_taus[1]) << " >= "
     << fmt(peak_taus[2]) << " >= " << fmt(peak_taus[3]) << ": "
     << (peaks_ordered ? "holds" : "violated") << " (slack 1e-12)";
  return {ordered && peaks_ordered, os.str()};
}

Verdict criterion_regime_structure() {
  const RunConfig weak = load_config(preset_path("fig1a"));
  const SweepResult weak_result = run_sweep(weak);
  const SweepCurve* weak_sel = curve_for(weak_result, MeasurementKind::selective, 1);
  if (weak_sel == nullptr) return {false, "fig1a preset is missing the selective protocol"};
  const std::size_t single_crossovers = weak_sel->analysis.crossovers.size();

  const RunConfig triplet = load_config(preset_path("fig3a"));
  const SweepResult triplet_result = run_sweep(triplet);
  const SweepCurve* triplet_sel = curve_for(triplet_result, MeasurementKind::selective, 1);
  if (triplet_sel == nullptr) return {false, "fig3a preset is missing the selective protocol"};
  const std::size_t triplet_crossovers = triplet_sel->analysis.crossovers.size();

  std::ostringstream os;
  os << "single-spin selective crossovers on [0.02,3]: " << single_crossovers
     << " (want exactly 1); triplet selective crossovers: " << triplet_crossovers
     << " (want >= 2)";
  return {single_crossovers == 1 && triplet_crossovers >= 2, os.str()};
}

Verdict criterion_algebraic_identities() {
  constexpr double kRateTol = 1e-12;
  double worst_rate = 0.0;
  SingleSpinModel single;
  single.bath = OhmicBath{0.1, 10.0, 10.0};
  const std::array<Scenario, 3> scenarios = {Scenario{single}, Scenario{fig2_model(0.1)},
                                             Scenario{LargeSpinModel{1.0, 1.0, OhmicBath{0.1, 10.0, 10.0}}}};
  for (const Scenario& scenario : scenarios) {
    for (const double tau : {0.1, 0.7, 2.0}) {
      const double ns = scenario_direct_rate(scenario, tau, 1, MeasurementKind::nonselective);
      const double sel = scenario_direct_rate(scenario, tau, 1, MeasurementKind::selective);
      worst_rate = std::max(worst_rate, std::abs(ns - sel) / std::max(1.0, std::abs(sel)));
    }
  }

  double worst_identity = 0.0;
  for (const double gamma : {0.0, 1e-6, 0.01, 0.2, 1.0, 5.0}) {
    for (const double delta : {0.0, 1e-5, 0.3, 2.0, 3.14159265358979323846}) {
      const double stay_weight = 1.0 - hop_near(gamma) - 2.0 * hop_far(gamma, delta);
      worst_identity = std::max(
          worst_identity, std::abs(stay_weight - std::cos(delta) * std::exp(-gamma)));
    }
  }

  double worst_overlap = 0.0;
  const Eigen::Matrix3cd p_plus = level_projector(1);
  const Eigen::Matrix3cd p_zero = level_projector(0);
  const Eigen::Matrix3cd p_minus = level_projector(-1);
  for (const double gamma : {0.0, 0.05, 0.4, 1.5}) {
    for (const double delta : {0.0, 0.3, 1.2, 2.8}) {
      worst_overlap = std::max(
          worst_overlap,
          std::abs(transition_overlap(p_plus, p_zero, gamma, delta) - hop_near(gamma)));
      worst_overlap = std::max(
          worst_overlap,
          std::abs(transition_overlap(p_plus, p_minus, gamma, delta) - hop_far(gamma, delta)));
    }
  }

  std::ostringstream os;
  os << "M=1 rate gap " << fmt(worst_rate) << " (tol 1e-12); stay-weight identity gap "
     << fmt(worst_identity) << " (tol 1e-14 abs); projector overlap gap "
     << fmt(worst_overlap) << " (tol 1e-12 abs)";
  return {worst_rate <= kRateTol && worst_identity <= 1e-14 && worst_overlap <= 1e-12,
          os.str()};
}

Verdict criterion_thread_determinism() {
  RunConfig config = load_config(preset_path("fig2a"));
  config.threads = 1;
  const SweepResult serial = run_sweep(config);
  config.threads = 4;
  const SweepResult threaded = run_sweep(config);

  std::ostringstream csv_serial;
  write_csv(csv_serial, config, serial);
  std::ostringstream csv_threaded;
  write_csv(csv_threaded, config, threaded);
  const bool csv_match = csv_serial.str() == csv_threaded.str();
  const bool meta_match = metadata_json(config, serial) == metadata_json(config, threaded);

  std::ostringstream os;
  os << "fig2a with 1 vs 4 threads: CSV bytes " << (csv_match ? "identical" : "DIFFER")
     << ", sidecar bytes " << (meta_match ? "identical" : "DIFFER");
  return {csv_match && meta_match, os.str()};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Entry> criteria = {
      {"two-level survival routes agree", criterion_two_level_routes},
      {"three-level survival routes agree", criterion_three_level_routes},
      {"bath integrals match closed forms", criterion_bath_integral_oracles},
      {"degeneracy collapse equals exact enumeration", criterion_collapse_vs_enumeration},
      {"hundred-spin presets stay finite", criterion_hundred_spin_stability},
      {"weak-coupling protocols overlap", criterion_weak_coupling_overlap},
      {"more measurements slow the decay", criterion_rate_ordering},
      {"regime crossover structure", criterion_regime_structure},
      {"algebraic identities", criterion_algebraic_identities},
      {"thread-count determinism", criterion_thread_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict verdict;
    try {
      verdict = criteria[i].run();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    if (!verdict.pass) ++failures;
    std::cout << (verdict.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
              << criteria[i].name << " -- " << verdict.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << " ("
            << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << ")\n";
  return failures == 0 ? 0 : 1;
}
