#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "iyengar/bounds.hpp"
#include "oracle_quad.hpp"

using namespace iyengar;

namespace {

const Interval kUnit(0.0, 1.0);

// v1 assembled from quadrature of its two defining t-integrals; independent
// of the log-Gamma route inside bound_v1. The first integrand t^alpha can
// blow up at t = 0 (alpha < 0 near the validity frontier), so it goes
// through the substitution t = u^32, which keeps the integrand bounded and
// smooth for every valid q.
double v1_by_quadrature(const Interval& iv, double q, double d2max) {
  const double p = q / (q - 1.0);
  const double alpha = (q - p) / (q - 1.0);
  const double t_int = 32.0 * testoracle::integrate(
                                  [&](double u) { return std::pow(u, 32.0 * (alpha + 1.0) - 1.0); },
                                  0.0, 1.0, 1e-12);
  const double b_int = testoracle::integrate(
      [&](double t) { return std::pow(t, p) * std::pow(1.0 - t, q); }, 0.0, 1.0, 1e-12);
  return 0.5 * iv.width() * iv.width() * std::pow(t_int, (q - 1.0) / q) *
         std::pow(b_int, 1.0 / q) * d2max;
}

}  // namespace

TEST_CASE("conjugate exponent values and involution") {
  CHECK(conjugate_exponent(2.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(conjugate_exponent(3.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(conjugate_exponent(1.2) == doctest::Approx(6.0).epsilon(1e-14));
  for (double q : {1.2, 1.5, 2.0, 3.0, 10.0})
    CHECK(std::abs(conjugate_exponent(conjugate_exponent(q)) - q) <= 1e-12);
  CHECK_THROWS_AS(conjugate_exponent(1.0), std::domain_error);
  CHECK_THROWS_AS(conjugate_exponent(0.5), std::domain_error);
}

TEST_CASE("v1 validity frontier sits at 2q^2 - 4q + 1 = 0") {
  CHECK_FALSE(HolderPair(1.2).v1_valid());
  CHECK_FALSE(HolderPair(1.5).v1_valid());
  CHECK_FALSE(HolderPair(1.7).v1_valid());
  CHECK(HolderPair(1.71).v1_valid());
  CHECK(HolderPair(2.0).v1_valid());
  CHECK(HolderPair(5.0).v1_valid());
}

TEST_CASE("bound_v1 values") {
  const SecondDerivEndpoints two(2.0, 2.0);
  CHECK(bound_v1(kUnit, HolderPair(2.0), two) ==
        doctest::Approx(0.18257418583505536).epsilon(1e-12));
  CHECK(bound_v1(kUnit, HolderPair(2.0), SecondDerivEndpoints(0.0, 0.0)) == 0.0);
  CHECK(bound_v1(Interval(0.0, 2.0), HolderPair(2.0), two) ==
        doctest::Approx(0.73029674334022143).epsilon(1e-12));
  CHECK_THROWS_AS(bound_v1(kUnit, HolderPair(1.5), two), validity_error);
}

TEST_CASE("bound_v1 matches quadrature assembly of its factors") {
  for (double q : {1.75, 2.0, 3.0, 5.0}) {
    const double direct = bound_v1(kUnit, HolderPair(q), SecondDerivEndpoints(2.0, 2.0));
    CHECK(direct == doctest::Approx(v1_by_quadrature(kUnit, q, 2.0)).epsilon(1e-9));
  }
}

TEST_CASE("bound_v2 values and exponent variants") {
  const SecondDerivEndpoints two(2.0, 2.0);
  CHECK(bound_v2(kUnit, 1.0, two) == doctest::Approx(1.0 / 6).epsilon(1e-13));
  CHECK(bound_v2(kUnit, 2.0, two) == doctest::Approx(0.20412414523193151).epsilon(1e-12));
  CHECK(bound_v2(kUnit, 1.0, SecondDerivEndpoints(0.0, 0.0)) == 0.0);
  CHECK(bound_v2(kUnit, 1.0, SecondDerivEndpoints(0.0, 0.0), V2Exponent::OneMinusOneOverQ) == 0.0);
  // q = 2 is the fixed point where both exponents coincide
  CHECK(std::abs(bound_v2(kUnit, 2.0, two) -
                 bound_v2(kUnit, 2.0, two, V2Exponent::OneMinusOneOverQ)) <= 1e-15);
  // at q = 4 the (q-1)/q variant is the smaller one (base < 1)
  CHECK(bound_v2(kUnit, 4.0, two) == doctest::Approx(0.25406637407730737).epsilon(1e-12));
  CHECK(bound_v2(kUnit, 4.0, two, V2Exponent::OneMinusOneOverQ) ==
        doctest::Approx(0.065599655708847682).epsilon(1e-12));
  CHECK_THROWS_AS(bound_v2(kUnit, 0.9, two), std::domain_error);
}

TEST_CASE("bound_v3 values") {
  const SecondDerivEndpoints two(2.0, 2.0);
  CHECK(bound_v3(kUnit, HolderPair(2.0), two) ==
        doctest::Approx(0.20412414523193151).epsilon(1e-12));
  CHECK(bound_v3(kUnit, HolderPair(2.0), SecondDerivEndpoints(0.0, 0.0)) == 0.0);
  // pinned through the Beta quadrature oracle: 2^{-4/3} B(2, 2.5)^{2/3} * 2
  const double expected_q3 =
      std::pow(2.0, -4.0 / 3) * std::pow(testoracle::beta(2.0, 2.5), 2.0 / 3) * 2.0;
  CHECK(expected_q3 == doctest::Approx(0.18691807486791942).epsilon(1e-11));
  CHECK(bound_v3(kUnit, HolderPair(3.0), two) == doctest::Approx(expected_q3).epsilon(1e-11));
  CHECK_THROWS_AS(bound_v3(kUnit, HolderPair(1.0), two), std::domain_error);
}

TEST_CASE("bound_v3 agrees with its second algebraic route") {
  // len^2/2^{1+1/q} B^{1/p} max  ==  (len^2/2) B^{1/p} (max^q/2)^{1/q}
  for (double q : {1.5, 2.0, 3.0, 7.0}) {
    const HolderPair hp(q);
    for (const auto& d2 : {SecondDerivEndpoints(1.0, 3.0), SecondDerivEndpoints(2.0, 0.5)}) {
      const Interval iv(0.5, 2.0);
      const double len = iv.width();
      const double other_route = 0.5 * len * len *
                                 std::pow(iyengar::beta(2.0, hp.p + 1.0), 1.0 / hp.p) *
                                 std::pow(std::pow(d2.max_abs(), q) / 2.0, 1.0 / q);
      CHECK(bound_v3(iv, hp, d2) == doctest::Approx(other_route).epsilon(1e-12));
    }
  }
}

TEST_CASE("classic bound is nonnegative whenever the input is consistent") {
  for (double m : {0.5, 1.0, 2.0, 10.0}) {
    for (double len : {0.5, 1.0, 3.0}) {
      const Interval iv(0.0, len);
      for (double frac : {-1.0, -0.5, 0.0, 0.7, 1.0}) {
        const double df = frac * m * len;  // |df| <= M(b-a) by construction
        CHECK(classic_iyengar_bound(iv, m, 0.0, df) >= 0.0);
      }
    }
  }
}

TEST_CASE("best_bound picks the minimum with deterministic ties") {
  const SecondDerivEndpoints two(2.0, 2.0);

  const BoundBreakdown at2 = best_bound(kUnit, 2.0, two);
  CHECK(at2.v1.has_value());
  CHECK(at2.v3.has_value());
  CHECK(at2.best == doctest::Approx(0.18257418583505536).epsilon(1e-12));
  CHECK(at2.winner == BoundKind::V1);

  const BoundBreakdown at1 = best_bound(kUnit, 1.0, two);
  CHECK_FALSE(at1.v1.has_value());
  CHECK_FALSE(at1.v3.has_value());
  CHECK(at1.best == doctest::Approx(1.0 / 6).epsilon(1e-13));
  CHECK(at1.winner == BoundKind::V2);

  // below the v1 frontier only v2 and v3 compete
  const BoundBreakdown at15 = best_bound(kUnit, 1.5, two);
  CHECK_FALSE(at15.v1.has_value());
  CHECK(at15.v3.has_value());

  const BoundBreakdown zero = best_bound(Interval(-3.0, 7.0), 2.0, SecondDerivEndpoints(0.0, 0.0));
  CHECK(zero.best == 0.0);
  CHECK(zero.winner == BoundKind::V1);  // tie at zero goes to the lowest index

  CHECK_THROWS_AS(best_bound(kUnit, 0.5, two), std::domain_error);
}

TEST_CASE("best_bound never exceeds any defined bound and the winner attains it") {
  const SecondDerivEndpoints d2(1.0, 3.0);
  for (double q : {1.0, 1.3, 1.71, 2.0, 3.5, 7.0}) {
    const BoundBreakdown bb = best_bound(Interval(0.5, 2.5), q, d2);
    if (bb.v1) CHECK(bb.best <= *bb.v1);
    CHECK(bb.best <= bb.v2);
    if (bb.v3) CHECK(bb.best <= *bb.v3);
    double attained = bb.v2;
    if (bb.winner == BoundKind::V1) attained = *bb.v1;
    if (bb.winner == BoundKind::V3) attained = *bb.v3;
    CHECK(bb.best == attained);
  }
}

TEST_CASE("length and derivative-scale homogeneity") {
  const SecondDerivEndpoints d2(1.0, 3.0);
  const Interval base(1.0, 2.0);
  for (double lambda : {0.5, 2.0, 3.0}) {
    const Interval scaled(1.0, 1.0 + lambda);
    const double ratio = lambda * lambda;
    CHECK(bound_v1(scaled, HolderPair(2.0), d2) ==
          doctest::Approx(ratio * bound_v1(base, HolderPair(2.0), d2)).epsilon(1e-12));
    CHECK(bound_v2(scaled, 1.5, d2) ==
          doctest::Approx(ratio * bound_v2(base, 1.5, d2)).epsilon(1e-12));
    CHECK(bound_v3(scaled, HolderPair(1.5), d2) ==
          doctest::Approx(ratio * bound_v3(base, HolderPair(1.5), d2)).epsilon(1e-12));
  }
  for (double lambda : {0.0, 0.25, 2.0, 10.0}) {
    const SecondDerivEndpoints scaled(lambda * d2.d2a, lambda * d2.d2b);
    CHECK(bound_v1(base, HolderPair(2.0), scaled) ==
          doctest::Approx(lambda * bound_v1(base, HolderPair(2.0), d2)).epsilon(1e-12));
    CHECK(bound_v2(base, 1.5, scaled) ==
          doctest::Approx(lambda * bound_v2(base, 1.5, d2)).epsilon(1e-12));
    CHECK(bound_v3(base, HolderPair(1.5), scaled) ==
          doctest::Approx(lambda * bound_v3(base, HolderPair(1.5), d2)).epsilon(1e-12));
  }
}

TEST_CASE("v2 shape factor: equality at q = 1, strictly inside (1/3, 1) after") {
  CHECK(v2_shape_factor(1.0) == 1.0 / 3.0);
  for (int i = 1; i <= 1000; ++i) {
    const double q = 1.0 + 99.0 * i / 1000.0;
    const double phi = v2_shape_factor(q);
    CHECK(phi > 1.0 / 3.0);
    CHECK(phi < 1.0);
  }
}

TEST_CASE("bound_v2_limit values and dominance over v2") {
  CHECK(bound_v2_limit(kUnit, 2.0, SecondDerivEndpoints(2.0, 2.0)) == 0.5);
  CHECK(bound_v2_limit(kUnit, 1.0, SecondDerivEndpoints(0.0, 0.0)) == 0.0);
  CHECK(bound_v2_limit(Interval(0.0, 3.0), 1.0, SecondDerivEndpoints(1.0, 2.0)) == 4.5);
  CHECK_THROWS_AS(bound_v2_limit(kUnit, 0.0, SecondDerivEndpoints(1.0, 1.0)), std::domain_error);

  const SecondDerivEndpoints d2(1.0, 3.0);
  for (double q = 1.0; q <= 50.0; q += 0.5)
    CHECK(bound_v2_limit(kUnit, q, d2) >= bound_v2(kUnit, q, d2));
}

TEST_CASE("sup_bound equals the endpoint forms with d2a = d2b = M") {
  CHECK(sup_bound(BoundKind::V1, kUnit, HolderPair(2.0), 2.0) ==
        doctest::Approx(0.18257418583505536).epsilon(1e-12));
  CHECK(sup_bound(BoundKind::V3, kUnit, HolderPair(2.0), 0.0) == 0.0);
  CHECK(sup_bound(BoundKind::V3, kUnit, HolderPair(2.0), 2.0) ==
        doctest::Approx(0.20412414523193151).epsilon(1e-12));
  CHECK_THROWS_AS(sup_bound(BoundKind::V2, kUnit, HolderPair(2.0), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sup_bound(BoundKind::V1, kUnit, HolderPair(2.0), -1.0), std::domain_error);
  CHECK_THROWS_AS(sup_bound(BoundKind::V1, kUnit, HolderPair(1.5), 1.0), validity_error);
}

TEST_CASE("classic Lipschitz-form bound") {
  CHECK(classic_iyengar_bound(kUnit, 2.0, 0.0, 1.0) == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(classic_iyengar_bound(kUnit, 1.0, 0.0, 1.0) == 0.0);
  CHECK(classic_iyengar_bound(Interval(0.0, 2.0), 1.0, 0.0, 0.0) == 0.5);
  CHECK_THROWS_AS(classic_iyengar_bound(kUnit, 0.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(classic_iyengar_bound(kUnit, -1.0, 0.0, 0.0), std::domain_error);
  // secant slope 2 cannot come from a 0.5-Lipschitz function
  CHECK_THROWS_AS(classic_iyengar_bound(kUnit, 0.5, 0.0, 2.0), std::domain_error);
}

TEST_CASE("first-derivative endpoint bounds") {
  const auto [s1, h1] = ion_bounds(kUnit, 2.0, 0.0, 2.0);
  CHECK(s1 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(h1 == doctest::Approx(0.57735026918962584).epsilon(1e-12));

  const auto [s2, h2] = ion_bounds(kUnit, 2.0, 0.0, 0.0);
  CHECK(s2 == 0.0);
  CHECK(h2 == 0.0);

  const auto [s3, h3] = ion_bounds(Interval(0.0, 4.0), 2.0, 1.0, 1.0);
  CHECK(s3 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h3 == doctest::Approx(1.1547005383792515).epsilon(1e-12));

  CHECK_THROWS_AS(ion_bounds(kUnit, 1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ion_bounds(kUnit, 2.0, -1.0, 1.0), std::domain_error);
}

TEST_CASE("interval and endpoint-data validation") {
  CHECK_THROWS_AS(Interval(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Interval(0.0, INFINITY), std::domain_error);
  CHECK_THROWS_AS(SecondDerivEndpoints(-0.1, 1.0), std::domain_error);
}
