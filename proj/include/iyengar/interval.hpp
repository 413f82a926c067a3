#pragma once

#include <cmath>
#include <stdexcept>

namespace iyengar {

// Closed interval [a, b] with a < b strictly, both endpoints finite.
struct Interval {
  double a;
  double b;

  Interval(double lo, double hi) : a(lo), b(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw std::domain_error("Interval: endpoints must be finite");
    if (!(lo < hi)) throw std::domain_error("Interval: requires a < b");
  }

  double width() const { return b - a; }
  double midpoint() const { return 0.5 * (a + b); }
};

}  // namespace iyengar
