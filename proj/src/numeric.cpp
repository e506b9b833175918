#include "zeno/numeric.hpp"

#include <array>
#include <stdexcept>

namespace zeno {

namespace {

using Table = std::array<std::array<std::uint64_t, kMaxBinomialRow + 1>, kMaxBinomialRow + 1>;

Table build_pascal() {
  Table t{};
  for (int n = 0; n <= kMaxBinomialRow; ++n) {
    t[n][0] = 1;
    t[n][n] = 1;
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  static const Table table = build_pascal();
  if (n < 0 || n > kMaxBinomialRow || k < 0 || k > n)
    throw std::out_of_range("binomial: arguments outside the exact table");
  return table[n][k];
}

double pow_int(double x, std::uint64_t n) {
  double result = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

double sin_minus_x(double x) {
  if (std::abs(x) >= 0.1) return std::sin(x) - x;
  // -x^3/6 * (1 - x^2/20 + x^4/840 - x^6/60480); next omitted term is below
  // 1e-19 relative at |x| = 0.1.
  const double x2 = x * x;
  return -(x * x2 / 6.0) * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
}

}  // namespace zeno
