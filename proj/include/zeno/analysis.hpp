#pragma once

#include <span>
#include <string>
#include <vector>

namespace zeno {

// Regime of a rate curve on a tau interval: Zeno while the effective decay
// rate grows with the measurement spacing, anti-Zeno while it falls.
enum class Regime { zeno, anti_zeno };

std::string to_string(Regime regime);

struct RegimeSegment {
  double tau_begin = 0.0;
  double tau_end = 0.0;
  Regime regime = Regime::zeno;
};

struct RatePeak {
  double tau = 0.0;
  double rate = 0.0;
};

struct RegimeClassification {
  std::vector<RegimeSegment> segments;  // tile [tau_front, tau_back] exactly
  std::vector<double> crossovers;       // boundaries between adjacent segments
};

struct CurveAnalysis {
  std::vector<RegimeSegment> segments;
  std::vector<double> crossovers;
  std::vector<RatePeak> peaks;
};

// Forward differences below this magnitude count as plateaus and are merged
// into the preceding segment rather than opening one of their own.
inline constexpr double kPlateauTolerance = 1e-12;

// Segments a sampled rate curve into alternating Zeno / anti-Zeno stretches.
// Requires at least 3 strictly increasing, finite samples. Crossover
// locations are linearly interpolated between the neighboring slope samples
// and clamped to the bracketing midpoints. Leading plateaus inherit the first
// decisive slope; an entirely flat curve is one Zeno segment by convention.
RegimeClassification classify_regimes(std::span<const double> taus,
                                      std::span<const double> rates);

// Strict three-point local maxima, each refined by the vertex of the
// parabola through its neighbors (clamped to the bracketing samples).
// Requires at least 3 strictly increasing, finite samples.
std::vector<RatePeak> find_peaks(std::span<const double> taus, std::span<const double> rates);

// classify_regimes and find_peaks over the same samples.
CurveAnalysis analyze_curve(std::span<const double> taus, std::span<const double> rates);

}  // namespace zeno
