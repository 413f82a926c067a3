#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "iyengar/errors.hpp"

namespace iyengar {

// Fixed-order Gauss-Legendre rule on [-1, 1]. Nodes and weights are computed
// once by Newton iteration on the Legendre recurrence, which is machine
// accurate and keeps the header free of long literal tables.
class GaussLegendre {
 public:
  explicit GaussLegendre(int order) : nodes_(order), weights_(order) {
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
      double deriv = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < order; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        deriv = order * (z * p1 - p2) / (z * z - 1.0);
        const double step = p1 / deriv;
        z -= step;
        if (std::abs(step) < 1e-16) break;
      }
      nodes_[i] = -z;
      nodes_[order - 1 - i] = z;
      weights_[i] = 2.0 / ((1.0 - z * z) * deriv * deriv);
      weights_[order - 1 - i] = weights_[i];
    }
  }

  template <typename F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      sum += weights_[i] * f(mid + half * nodes_[i]);
    return half * sum;
  }

  template <typename F>
  double composite(F&& f, double a, double b, std::size_t panels) const {
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t i = 0; i < panels; ++i)
      sum += integrate(f, a + static_cast<double>(i) * h, a + static_cast<double>(i + 1) * h);
    return sum;
  }

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

inline const GaussLegendre& default_gauss_rule() {
  static const GaussLegendre rule(20);
  return rule;
}

// Error-controlled refinement loop: composite 20-point Gauss-Legendre with
// panel doubling until two successive refinements in a row agree within
// abs_tol/2. Throws oracle_error instead of returning an unconverged value.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol, int max_doublings = 22) {
  const GaussLegendre& rule = default_gauss_rule();
  double prev = rule.composite(f, a, b, 1);
  int agreements = 0;
  for (int k = 1; k <= max_doublings; ++k) {
    const double cur = rule.composite(f, a, b, std::size_t{1} << k);
    if (std::abs(cur - prev) <= 0.5 * abs_tol) {
      if (++agreements == 2) return cur;
    } else {
      agreements = 0;
    }
    prev = cur;
  }
  throw oracle_error("integrate_adaptive: no convergence to tolerance " + std::to_string(abs_tol) +
                     " within " + std::to_string(max_doublings) + " doublings");
}

}  // namespace iyengar
