#pragma once

#include <cstdint>
#include <functional>

namespace zeno {

// Composite 15-point Gauss-Legendre rule over [a, b] split into `panels`
// equal panels. Exact for polynomials up to degree 29 on each panel.
double composite_gauss15(const std::function<double(double)>& f, double a, double b,
                         std::int64_t panels);

struct AdaptiveOptions {
  double relative_tolerance = 1e-9;
  double absolute_tolerance = 1e-18;
  int max_doublings = 16;
  // Hard caps: requests needing more initial panels are rejected up front
  // (capacity), runs whose doubling would pass the total are rejected as
  // non-convergent (numerical).
  std::int64_t max_initial_panels = 4'000'000;
  std::int64_t max_total_panels = 8'000'000;
};

// Panel-doubling refinement of composite_gauss15: doubles the panel count
// until successive estimates agree within rel*|I| + abs, returning the finer
// estimate. Throws capacity_error when initial_panels exceeds the cap and
// numerical_error when the budget or doubling limit is exhausted before
// convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          std::int64_t initial_panels, const AdaptiveOptions& options = {});

}  // namespace zeno
