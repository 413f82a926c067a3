#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iyengar/errors.hpp"
#include "iyengar/gauss.hpp"
#include "iyengar/interval.hpp"

// Test-function registry: a closed set of families with analytic derivatives,
// chosen to cover constant, increasing, decreasing and valley-shaped |f''|.

namespace iyengar {

// f(x) = sum_i coeffs[i] x^i
struct Polynomial {
  std::vector<double> coeffs;
};

// f(x) = scale e^{rate x}
struct Exponential {
  double scale;
  double rate;
};

// f(x) = 1/(x + shift), pole at x = -shift
struct Reciprocal {
  double shift;
};

// The stock quasi-convex-but-not-convex example on [-2, 2]:
// g(t) = 1 on [-2, -1], g(t) = t^2 on (-1, 2]. Order-0 evaluation only
// (not differentiable at -1).
struct PiecewiseG {};

struct FunctionSpec {
  std::variant<Polynomial, Exponential, Reciprocal, PiecewiseG> family;
  std::string label;
};

inline FunctionSpec make_polynomial(std::vector<double> coeffs, std::string label) {
  for (double c : coeffs)
    if (!std::isfinite(c)) throw std::domain_error("polynomial coefficients must be finite");
  return {Polynomial{std::move(coeffs)}, std::move(label)};
}

// Analytic value of f, f' or f'' at x (order 0, 1 or 2).
inline double evaluate(const FunctionSpec& f, double x, int order) {
  if (order < 0 || order > 2) throw std::invalid_argument("evaluate: order must be 0, 1 or 2");
  if (const auto* poly = std::get_if<Polynomial>(&f.family)) {
    // Horner on the derived coefficients c_i * i(i-1)...(i-order+1)
    const auto& c = poly->coeffs;
    double v = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= order; --i) {
      double m = c[static_cast<std::size_t>(i)];
      for (int k = 0; k < order; ++k) m *= static_cast<double>(i - k);
      v = v * x + m;
    }
    return v;
  }
  if (const auto* ex = std::get_if<Exponential>(&f.family)) {
    double m = ex->scale;
    for (int k = 0; k < order; ++k) m *= ex->rate;
    return m * std::exp(ex->rate * x);
  }
  if (const auto* re = std::get_if<Reciprocal>(&f.family)) {
    const double u = x + re->shift;
    if (u == 0.0) throw evaluation_error("evaluate: pole of 1/(x+shift) at x = " + std::to_string(x));
    switch (order) {
      case 0: return 1.0 / u;
      case 1: return -1.0 / (u * u);
      default: return 2.0 / (u * u * u);
    }
  }
  // PiecewiseG
  if (order != 0)
    throw evaluation_error("evaluate: piecewise example supports order 0 only");
  if (x < -2.0 || x > 2.0)
    throw evaluation_error("evaluate: piecewise example is defined on [-2, 2]");
  return x <= -1.0 ? 1.0 : x * x;
}

// Grid verdict for the quasi-convexity condition. When holds is false the
// witness is a grid triple x < y < z with f(y) > max{f(x), f(z)} + tolerance.
struct QuasiconvexVerdict {
  bool holds = true;
  std::optional<std::array<double, 3>> witness;
  int grid_size = 0;
  double tolerance = 0.0;
};

// Sequence-level kernel shared by the grid check: indices (i, j, k) of a
// triple with v[j] > max(v[i], v[k]) + tol, or nullopt when the sequence is
// valley-shaped within tol. Computed with running prefix/suffix minima, which
// makes it exactly equivalent to the exhaustive O(n^3) triple test; the
// returned j maximizes the violation margin (first such j on ties).
inline std::optional<std::array<int, 3>> valley_violation(const std::vector<double>& v,
                                                          double tol) {
  const int n = static_cast<int>(v.size());
  if (n < 3) return std::nullopt;
  std::vector<int> prefix_argmin(n), suffix_argmin(n);
  prefix_argmin[0] = 0;
  for (int i = 1; i < n; ++i)
    prefix_argmin[i] = v[i] < v[prefix_argmin[i - 1]] ? i : prefix_argmin[i - 1];
  suffix_argmin[n - 1] = n - 1;
  for (int i = n - 2; i >= 0; --i)
    suffix_argmin[i] = v[i] < v[suffix_argmin[i + 1]] ? i : suffix_argmin[i + 1];
  int best_j = -1;
  double best_margin = tol;
  for (int j = 1; j + 1 < n; ++j) {
    const double side = std::max(v[prefix_argmin[j - 1]], v[suffix_argmin[j + 1]]);
    const double margin = v[j] - side;
    if (margin > best_margin) {
      best_margin = margin;
      best_j = j;
    }
  }
  if (best_j < 0) return std::nullopt;
  return std::array<int, 3>{prefix_argmin[best_j - 1], best_j, suffix_argmin[best_j + 1]};
}

// Samples grid_n uniform points of f (order 0) or |f''| (order 2) and checks
// the valley shape. A grid verdict is a surrogate: it certifies the sampled
// sequence only, not the continuum condition.
inline QuasiconvexVerdict is_quasiconvex(const FunctionSpec& f, const Interval& iv, int order,
                                         int grid_n = 1025, double tol = 1e-9) {
  if (grid_n < 3) throw std::invalid_argument("is_quasiconvex: grid_n must be >= 3");
  if (order != 0 && order != 2) throw std::invalid_argument("is_quasiconvex: order must be 0 or 2");
  std::vector<double> xs(static_cast<std::size_t>(grid_n));
  std::vector<double> vs(static_cast<std::size_t>(grid_n));
  for (int i = 0; i < grid_n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_n - 1);
    xs[static_cast<std::size_t>(i)] = iv.a + (iv.b - iv.a) * t;
    const double v = evaluate(f, xs[static_cast<std::size_t>(i)], order);
    vs[static_cast<std::size_t>(i)] = order == 2 ? std::abs(v) : v;
  }
  QuasiconvexVerdict verdict;
  verdict.grid_size = grid_n;
  verdict.tolerance = tol;
  if (const auto idx = valley_violation(vs, tol)) {
    verdict.holds = false;
    verdict.witness = {xs[static_cast<std::size_t>((*idx)[0])],
                       xs[static_cast<std::size_t>((*idx)[1])],
                       xs[static_cast<std::size_t>((*idx)[2])]};
  }
  return verdict;
}

// Grid maximum of |f''| over grid_n uniform points including both endpoints.
// A lower estimate of the true supremum; exact whenever |f''| attains its
// maximum at a grid point (monotone or endpoint-peaked |f''|).
inline double sup_abs_d2(const FunctionSpec& f, const Interval& iv, int grid_n = 1025) {
  if (grid_n < 2) throw std::invalid_argument("sup_abs_d2: grid_n must be >= 2");
  double m = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_n - 1);
    m = std::max(m, std::abs(evaluate(f, iv.a + (iv.b - iv.a) * t, 2)));
  }
  return m;
}

// High-accuracy reference for int_a^b f, absolute error <= 1e-10. Polynomial
// and exponential families use their exact antiderivatives; everything else
// goes through the error-controlled composite Gauss-Legendre loop, which
// throws oracle_error rather than return an unconverged value.
inline double reference_integral(const FunctionSpec& f, const Interval& iv) {
  if (const auto* poly = std::get_if<Polynomial>(&f.family)) {
    const auto& c = poly->coeffs;
    const auto antiderivative = [&](double x) {
      double v = 0.0;
      for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        v = v * x + c[static_cast<std::size_t>(i)] / (i + 1.0);
      return v * x;
    };
    return antiderivative(iv.b) - antiderivative(iv.a);
  }
  if (const auto* ex = std::get_if<Exponential>(&f.family)) {
    if (ex->rate == 0.0) return ex->scale * iv.width();
    return ex->scale / ex->rate * (std::exp(ex->rate * iv.b) - std::exp(ex->rate * iv.a));
  }
  return integrate_adaptive([&](double x) { return evaluate(f, x, 0); }, iv.a, iv.b, 1e-10);
}

}  // namespace iyengar
