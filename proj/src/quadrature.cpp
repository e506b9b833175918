#include "zeno/quadrature.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

// 15-point Gauss-Legendre abscissas/weights on [-1, 1], positive half;
// the node at 0 is listed first and not mirrored. Weights sum to 2.
struct Node {
  double x;
  double w;
};

constexpr std::array<Node, 8> kHalf = {{
    {0.0, 0.20257824192556127288},
    {0.20119409399743452230, 0.19843148532711157646},
    {0.39415134707756336990, 0.18616100001556221103},
    {0.57097217260853884754, 0.16626920581699393355},
    {0.72441773136017004742, 0.13957067792615431445},
    {0.84820658341042721620, 0.10715922046717193501},
    {0.93727339240070590431, 0.070366047488108124709},
    {0.98799251802048542849, 0.030753241996117268355},
}};

}  // namespace

double composite_gauss15(const std::function<double(double)>& f, double a, double b,
                         std::int64_t panels) {
  if (!(b > a)) throw validation_error("quadrature interval must satisfy b > a");
  if (panels < 1) throw validation_error("quadrature needs at least one panel");
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::int64_t p = 0; p < panels; ++p) {
    const double left = a + width * static_cast<double>(p);
    const double center = left + 0.5 * width;
    const double scale = 0.5 * width;
    double panel = kHalf[0].w * f(center);
    for (std::size_t i = 1; i < kHalf.size(); ++i) {
      const double offset = scale * kHalf[i].x;
      panel += kHalf[i].w * (f(center - offset) + f(center + offset));
    }
    total += scale * panel;
  }
  return total;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          std::int64_t initial_panels, const AdaptiveOptions& options) {
  if (initial_panels < 1) throw validation_error("quadrature needs at least one panel");
  if (initial_panels > options.max_initial_panels) {
    std::ostringstream os;
    os << "quadrature request needs " << initial_panels << " initial panels, above the "
       << options.max_initial_panels << " cap";
    throw capacity_error(os.str());
  }
  std::int64_t panels = initial_panels;
  double coarse = composite_gauss15(f, a, b, panels);
  for (int round = 0; round < options.max_doublings; ++round) {
    if (panels > options.max_total_panels / 2) {
      throw numerical_error("quadrature panel budget exhausted before convergence");
    }
    panels *= 2;
    const double fine = composite_gauss15(f, a, b, panels);
    const double goal =
        options.relative_tolerance * std::abs(fine) + options.absolute_tolerance;
    if (std::abs(fine - coarse) <= goal) return fine;
    coarse = fine;
  }
  throw numerical_error("quadrature failed to converge within the doubling limit");
}

}  // namespace zeno
