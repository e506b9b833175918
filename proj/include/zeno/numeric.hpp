#pragma once

#include <cmath>
#include <cstdint>

namespace zeno {

// Extended-precision accumulator for alternating sums whose intermediate
// terms exceed double range safety. GCC/Clang on x86-64 provide __float128
// in all supported configurations of this project.
using quad = __float128;

// Largest binomial row kept in the exact integer table. C(64, 32) =
// 1832624140942590534 still fits in uint64_t; row 65 does not.
inline constexpr int kMaxBinomialRow = 64;

// Exact C(n, k) for 0 <= k <= n <= kMaxBinomialRow, from a Pascal-triangle
// table built on first use. No overflow by the row bound above.
std::uint64_t binomial(int n, int k);

// x^n by binary exponentiation, n >= 0. x^0 == 1 for every x including 0,
// matching the empty-product convention used by the survival chain formulas.
double pow_int(double x, std::uint64_t n);

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

// sin(x) - x evaluated without cancellation for small |x|; used where the
// leading linear part of an oscillatory integrand is handled analytically.
// Series branch below |x| < 0.1 keeps relative error at double-epsilon level.
double sin_minus_x(double x);

}  // namespace zeno
