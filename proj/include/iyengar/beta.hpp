#pragma once

#include <cmath>
#include <stdexcept>

namespace iyengar {

namespace detail {

// n! as a double; exact for n <= 18 and correctly representable up to 170.
inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline bool is_integer_arg(double x) { return x == std::floor(x) && x >= 1.0; }

}  // namespace detail

// Euler Beta function B(x, y) = int_0^1 t^{x-1} (1-t)^{y-1} dt for x, y > 0.
// Integer arguments take the exact factorial ratio (x-1)!(y-1)!/(x+y-1)!;
// everything else goes through log-Gamma, relative error <= 1e-12.
inline double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("beta: arguments must be positive");
  if (detail::is_integer_arg(x) && detail::is_integer_arg(y) && x + y - 1.0 <= 170.0) {
    const int m = static_cast<int>(x);
    const int n = static_cast<int>(y);
    return detail::factorial(m - 1) * detail::factorial(n - 1) / detail::factorial(m + n - 1);
  }
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace iyengar
