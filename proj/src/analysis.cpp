#include "zeno/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

void check_samples(std::span<const double> taus, std::span<const double> rates) {
  if (taus.size() != rates.size())
    throw validation_error("curve needs one rate per tau sample");
  if (taus.size() < 3)
    throw validation_error("curve analysis needs at least 3 samples");
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!std::isfinite(taus[i]) || !std::isfinite(rates[i]))
      throw validation_error("curve samples must be finite");
    if (i > 0 && !(taus[i] > taus[i - 1]))
      throw validation_error("tau samples must be strictly increasing");
  }
}

double interpolate_zero(double x0, double y0, double x1, double y1) {
  if (y1 == y0) return 0.5 * (x0 + x1);
  const double x = x0 - y0 * (x1 - x0) / (y1 - y0);
  return std::clamp(x, x0, x1);
}

}  // namespace

std::string to_string(Regime regime) {
  return regime == Regime::zeno ? "zeno" : "anti_zeno";
}

RegimeClassification classify_regimes(std::span<const double> taus,
                                      std::span<const double> rates) {
  check_samples(taus, rates);
  const std::size_t n = taus.size();
  std::vector<double> mids(n - 1);
  std::vector<double> slopes(n - 1);  // forward differences; sign is what matters
  for (std::size_t i = 0; i + 1 < n; ++i) {
    mids[i] = 0.5 * (taus[i] + taus[i + 1]);
    slopes[i] = rates[i + 1] - rates[i];
  }

  // Effective signs: plateaus (|diff| below tolerance) inherit the preceding
  // decisive sign; leading plateaus take the first decisive one.
  std::vector<int> signs(n - 1, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (slopes[i] > kPlateauTolerance)
      signs[i] = 1;
    else if (slopes[i] < -kPlateauTolerance)
      signs[i] = -1;
  }
  int carry = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (signs[i] == 0)
      signs[i] = carry;
    else
      carry = signs[i];
  }
  int lead = 0;
  for (std::size_t i = 0; i + 1 < n && lead == 0; ++i) lead = signs[i];
  if (lead == 0) lead = 1;  // fully flat curve: Zeno by convention
  for (std::size_t i = 0; i + 1 < n && signs[i] == 0; ++i) signs[i] = lead;

  RegimeClassification out;
  double begin = taus.front();
  Regime current = signs[0] > 0 ? Regime::zeno : Regime::anti_zeno;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (signs[i + 1] == signs[i]) continue;
    const double cross = interpolate_zero(mids[i], slopes[i], mids[i + 1], slopes[i + 1]);
    out.segments.push_back({begin, cross, current});
    out.crossovers.push_back(cross);
    begin = cross;
    current = signs[i + 1] > 0 ? Regime::zeno : Regime::anti_zeno;
  }
  out.segments.push_back({begin, taus.back(), current});
  return out;
}

std::vector<RatePeak> find_peaks(std::span<const double> taus, std::span<const double> rates) {
  check_samples(taus, rates);
  std::vector<RatePeak> peaks;
  for (std::size_t i = 1; i + 1 < taus.size(); ++i) {
    if (!(rates[i] > rates[i - 1] && rates[i] > rates[i + 1])) continue;
    const double x0 = taus[i - 1], x1 = taus[i], x2 = taus[i + 1];
    const double y0 = rates[i - 1], y1 = rates[i], y2 = rates[i + 1];
    const double denom = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
    double vertex = x1;
    double value = y1;
    if (denom != 0.0) {
      vertex = x1 - 0.5 *
                        ((x1 - x0) * (x1 - x0) * (y1 - y2) -
                         (x1 - x2) * (x1 - x2) * (y1 - y0)) /
                        denom;
      vertex = std::clamp(vertex, x0, x2);
      const double c1 = (y1 - y0) / (x1 - x0);
      const double c2 = ((y2 - y1) / (x2 - x1) - c1) / (x2 - x0);
      value = y0 + c1 * (vertex - x0) + c2 * (vertex - x0) * (vertex - x1);
    }
    peaks.push_back({vertex, value});
  }
  return peaks;
}

CurveAnalysis analyze_curve(std::span<const double> taus, std::span<const double> rates) {
  RegimeClassification classes = classify_regimes(taus, rates);
  CurveAnalysis out;
  out.segments = std::move(classes.segments);
  out.crossovers = std::move(classes.crossovers);
  out.peaks = find_peaks(taus, rates);
  return out;
}

}  // namespace zeno
