#pragma once

// Test-only oracles, deliberately independent of the library's numeric
// paths: adaptive Simpson quadrature (vs the library's Gauss-Legendre and
// log-Gamma routes) and the exhaustive O(n^3) quasi-convexity triple check
// (vs the running-minimum valley check).

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

namespace testoracle {

namespace detail {

inline double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// force > 0 keeps subdividing even when the Richardson delta looks converged;
// symmetric integrands (e.g. sin^2 cos^6 on [0, pi/2]) can zero the delta at
// the first level by coincidence.
inline double adaptive(const std::function<double(double)>& f, double a, double b, double fa,
                       double fm, double fb, double whole, double tol, int depth, int force) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || (force <= 0 && std::abs(delta) <= 15.0 * tol))
    return left + right + delta / 15.0;
  return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, force - 1) +
         adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, force - 1);
}

}  // namespace detail

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return detail::adaptive(f, a, b, fa, fm, fb, detail::simpson(a, b, fa, fm, fb), tol, 48, 4);
}

// Euler Beta via its trigonometric form 2 int_0^{pi/2} sin^{2x-1} cos^{2y-1};
// the integrand is smooth for x, y >= 1/2, so plain quadrature applies.
inline double beta(double x, double y) {
  return 2.0 * integrate(
                   [&](double th) {
                     return std::pow(std::sin(th), 2.0 * x - 1.0) *
                            std::pow(std::cos(th), 2.0 * y - 1.0);
                   },
                   0.0, std::numbers::pi / 2.0, 1e-13);
}

// First grid triple i < j < k with v[j] > max(v[i], v[k]) + tol, scanning
// lexicographically; nullopt when none exists.
inline std::optional<std::array<int, 3>> brute_force_violation(const std::vector<double>& v,
                                                               double tol) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (v[j] > std::max(v[i], v[k]) + tol) return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

}  // namespace testoracle
