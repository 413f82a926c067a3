#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "iyengar/beta.hpp"
#include "iyengar/errors.hpp"
#include "iyengar/interval.hpp"

// Closed-form upper bounds on the trapezoid defect
//
//   |(f(a)+f(b))/2 - (1/(b-a)) int_a^b f|
//
// for twice-differentiable f whose |f''|^q is quasi-convex on [a, b]. Three
// bound families are provided (v1, v2, v3), differing in how the kernel
// integral int_0^1 t(1-t)|f''(ta+(1-t)b)| dt is split. Each depends on the
// data only through max{|f''(a)|, |f''(b)|} and the interval length.

namespace iyengar {

// Conjugate exponent p with 1/p + 1/q = 1; finite only for q > 1.
inline double conjugate_exponent(double q) {
  if (!(q > 1.0)) throw std::domain_error("conjugate_exponent: no finite conjugate for q <= 1");
  return q / (q - 1.0);
}

// Conjugate exponent pair (q, p), q > 1. v1_valid() marks the exponents for
// which the v1 bound's inner integral int_0^1 t^{(q-p)/(q-1)} dt converges:
// 2q^2 - 4q + 1 > 0, i.e. q > 1 + sqrt(2)/2 ~ 1.7071.
struct HolderPair {
  double q;
  double p;

  explicit HolderPair(double q_) : q(q_), p(conjugate_exponent(q_)) {}

  bool v1_valid() const { return 2.0 * q * q - 4.0 * q + 1.0 > 0.0; }
};

// |f''| at the two interval endpoints, nonnegative by construction.
struct SecondDerivEndpoints {
  double d2a;
  double d2b;

  SecondDerivEndpoints(double at_a, double at_b) : d2a(at_a), d2b(at_b) {
    if (!(d2a >= 0.0) || !(d2b >= 0.0))
      throw std::domain_error("SecondDerivEndpoints: values must be nonnegative");
  }

  // (max{d2a^q, d2b^q})^{1/q} = max{d2a, d2b}: powers commute with max on
  // nonnegatives, so the q never enters.
  double max_abs() const { return std::max(d2a, d2b); }
};

enum class BoundKind { V1, V2, V3 };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::V1: return "v1";
    case BoundKind::V2: return "v2";
    case BoundKind::V3: return "v3";
  }
  return "?";
}

// The v2 bound circulates with two exponents on its 2/((q+1)(q+2)) factor.
// OneOverQ is the variant the power-mean derivation actually yields and the
// only one treated as sound; OneMinusOneOverQ is exposed for the empirical
// discrimination experiment in the verify module.
enum class V2Exponent { OneOverQ, OneMinusOneOverQ };

// v1 = ((b-a)^2/2) ((q-1)/(2q-p-1))^{(q-1)/q} B(p+1,q+1)^{1/q}
//      (max{|f''(a)|^q, |f''(b)|^q})^{1/q},   valid for q > 1 + sqrt(2)/2.
inline double bound_v1(const Interval& iv, const HolderPair& hp, const SecondDerivEndpoints& d2) {
  if (!hp.v1_valid())
    throw validity_error("bound_v1: Holder split divergent for this q (needs q > 1 + sqrt(2)/2)");
  const double len = iv.width();
  const double t_factor = std::pow((hp.q - 1.0) / (2.0 * hp.q - hp.p - 1.0), (hp.q - 1.0) / hp.q);
  const double b_factor = std::pow(beta(hp.p + 1.0, hp.q + 1.0), 1.0 / hp.q);
  return 0.5 * len * len * t_factor * b_factor * d2.max_abs();
}

// v2 = ((b-a)^2/4) (2/((q+1)(q+2)))^e (max{|f''(a)|^q, |f''(b)|^q})^{1/q}
// with e = 1/q by default, valid for q >= 1.
inline double bound_v2(const Interval& iv, double q, const SecondDerivEndpoints& d2,
                       V2Exponent variant = V2Exponent::OneOverQ) {
  if (!(q >= 1.0)) throw std::domain_error("bound_v2: requires q >= 1");
  const double e = variant == V2Exponent::OneOverQ ? 1.0 / q : (q - 1.0) / q;
  const double len = iv.width();
  return 0.25 * len * len * std::pow(2.0 / ((q + 1.0) * (q + 2.0)), e) * d2.max_abs();
}

// v3 = ((b-a)^2 / 2^{1+1/q}) B(2,p+1)^{1/p} (max{|f''(a)|^q, |f''(b)|^q})^{1/q},
// valid for q > 1. Equals ((b-a)^2/2) B(2,p+1)^{1/p} (max/2)^{1/q}.
inline double bound_v3(const Interval& iv, const HolderPair& hp, const SecondDerivEndpoints& d2) {
  const double len = iv.width();
  return len * len / std::pow(2.0, 1.0 + 1.0 / hp.q) *
         std::pow(beta(2.0, hp.p + 1.0), 1.0 / hp.p) * d2.max_abs();
}

// The three bound values with their minimum. v1 and v3 are absent when not
// defined for the given q rather than carrying sentinels.
struct BoundBreakdown {
  std::optional<double> v1;  // absent when q = 1 or q <= 1 + sqrt(2)/2
  double v2 = 0.0;           // always defined for q >= 1 (OneOverQ exponent)
  std::optional<double> v3;  // absent when q = 1
  double best = 0.0;
  BoundKind winner = BoundKind::V2;
};

// min over the defined bounds; ties break to the lowest index (v1 before v2
// before v3) so results are deterministic.
inline BoundBreakdown best_bound(const Interval& iv, double q, const SecondDerivEndpoints& d2) {
  if (!(q >= 1.0)) throw std::domain_error("best_bound: requires q >= 1");
  BoundBreakdown out;
  out.v2 = bound_v2(iv, q, d2);
  if (q > 1.0) {
    const HolderPair hp(q);
    if (hp.v1_valid()) out.v1 = bound_v1(iv, hp, d2);
    out.v3 = bound_v3(iv, hp, d2);
  }
  double best = std::numeric_limits<double>::infinity();
  BoundKind winner = BoundKind::V2;
  const auto consider = [&](const std::optional<double>& v, BoundKind k) {
    if (v && *v < best) {
      best = *v;
      winner = k;
    }
  };
  consider(out.v1, BoundKind::V1);
  consider(out.v2, BoundKind::V2);
  consider(out.v3, BoundKind::V3);
  out.best = best;
  out.winner = winner;
  return out;
}

// Shape factor of the v2 bound, phi(q) = (2/((q+1)(q+2)))^{1/q}. Satisfies
// phi(1) = 1/3 and 1/3 < phi(q) < 1 for q > 1, increasing towards 1.
inline double v2_shape_factor(double q) {
  return std::pow(2.0 / ((q + 1.0) * (q + 2.0)), 1.0 / q);
}

// The q-free envelope of v2: ((b-a)^2/4) (max{|f''(a)|^q, |f''(b)|^q})^{1/q},
// an upper bound for every v2 since phi(q) < 1. When |f''|^q is monotone the
// max sits at the corresponding endpoint, giving the one-endpoint forms.
inline double bound_v2_limit(const Interval& iv, double q, const SecondDerivEndpoints& d2) {
  if (!(q >= 1.0)) throw std::domain_error("bound_v2_limit: requires q >= 1");
  const double len = iv.width();
  return 0.25 * len * len * d2.max_abs();
}

// v1/v3 with the endpoint max replaced by a supremum M >= sup |f''|; equal to
// the endpoint forms with d2a = d2b = M since (max{M^q})^{1/q} = M.
inline double sup_bound(BoundKind kind, const Interval& iv, const HolderPair& hp, double sup_d2) {
  if (!(sup_d2 >= 0.0)) throw std::domain_error("sup_bound: supremum must be nonnegative");
  const SecondDerivEndpoints d2(sup_d2, sup_d2);
  switch (kind) {
    case BoundKind::V1: return bound_v1(iv, hp, d2);
    case BoundKind::V3: return bound_v3(iv, hp, d2);
    case BoundKind::V2: break;
  }
  throw std::invalid_argument("sup_bound: kind must be V1 or V3");
}

// First-order Lipschitz form: M(b-a)/4 - (f(b)-f(a))^2 / (4M(b-a)) for a
// difference-quotient supremum M. Nonnegative whenever M(b-a) >= |f(b)-f(a)|.
inline double classic_iyengar_bound(const Interval& iv, double lipschitz, double fa, double fb) {
  if (!(lipschitz > 0.0)) throw std::domain_error("classic_iyengar_bound: M must be positive");
  const double len = iv.width();
  const double df = fb - fa;
  if (std::abs(df) > lipschitz * len)
    throw std::domain_error("classic_iyengar_bound: inconsistent input, |f(b)-f(a)| > M(b-a)");
  // nonnegative under the precondition; the clamp absorbs the last-ulp
  // rounding of the extremal case M(b-a) = |f(b)-f(a)|
  return std::max(0.0, lipschitz * len / 4.0 - df * df / (4.0 * lipschitz * len));
}

// First-derivative endpoint bounds for |f'| quasi-convex:
//   first  = ((b-a)/4) sup{|f'(a)|, |f'(b)|}
//   second = ((b-a) / (2(p+1)^{1/p})) (sup{|f'(a)|^{p/(p-1)}, |f'(b)|^{p/(p-1)}})^{(p-1)/p}
inline std::pair<double, double> ion_bounds(const Interval& iv, double p, double d1a, double d1b) {
  if (!(d1a >= 0.0) || !(d1b >= 0.0))
    throw std::domain_error("ion_bounds: derivative magnitudes must be nonnegative");
  if (!(p > 1.0)) throw std::domain_error("ion_bounds: requires p > 1 for the second component");
  const double len = iv.width();
  const double sup = std::max(d1a, d1b);  // powers commute with max
  return {len / 4.0 * sup, len / (2.0 * std::pow(p + 1.0, 1.0 / p)) * sup};
}

}  // namespace iyengar
