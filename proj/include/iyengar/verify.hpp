#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "iyengar/bounds.hpp"
#include "iyengar/corpus.hpp"
#include "iyengar/functions.hpp"
#include "iyengar/gauss.hpp"
#include "iyengar/interval.hpp"

// Batch verification harness: sweeps a corpus against the reference
// integrator, compares the actual trapezoid defect with every applicable
// bound, and reports margins. A record counts as a VIOLATION only when the
// quasi-convexity hypothesis held on the grid and the defect exceeded the
// best bound by more than the noise threshold.

namespace iyengar {

inline constexpr double kViolationThreshold = -1e-10;

struct VerificationRecord {
  std::string label;
  double a = 0.0;
  double b = 0.0;
  double q = 1.0;
  double lhs_error = 0.0;            // |(f(a)+f(b))/2 - (1/(b-a)) int f|
  std::optional<double> v1;
  double v2 = 0.0;                   // exponent 1/q
  double v2_alt = 0.0;               // exponent (q-1)/q, reported only
  std::optional<double> v3;
  double limit_bound = 0.0;
  double best = 0.0;
  BoundKind winner = BoundKind::V2;
  double margin = 0.0;               // best - lhs_error
  bool quasiconvex = false;          // grid verdict for |f''| on [a, b]
  bool negative_domain = false;      // a < 0: outside the bounds' stated domain
  bool violation = false;
  std::optional<std::string> error;  // per-record failure, captured not thrown
};

// |LHS - RHS| of the defect identity
//   (f(a)+f(b))/2 - (1/(b-a)) int_a^b f
//     = ((b-a)^2/2) int_0^1 t(1-t) f''(ta + (1-t)b) dt
// with both integrals at tolerance 1e-10.
inline double lemma_identity_residual(const FunctionSpec& f, const Interval& iv) {
  const double lhs = 0.5 * (evaluate(f, iv.a, 0) + evaluate(f, iv.b, 0)) -
                     reference_integral(f, iv) / iv.width();
  const double kernel = integrate_adaptive(
      [&](double t) { return t * (1.0 - t) * evaluate(f, t * iv.a + (1.0 - t) * iv.b, 2); }, 0.0,
      1.0, 1e-10);
  const double rhs = 0.5 * iv.width() * iv.width() * kernel;
  return std::abs(lhs - rhs);
}

// One record per (corpus entry, q), in corpus x grid order. Failures are
// captured in the record's error field; the sweep itself never throws.
inline std::vector<VerificationRecord> sweep(const std::vector<CorpusEntry>& corpus,
                                             const std::vector<double>& q_grid) {
  std::vector<VerificationRecord> out;
  out.reserve(corpus.size() * q_grid.size());
  for (const auto& entry : corpus) {
    for (const double q : q_grid) {
      VerificationRecord r;
      r.label = entry.fn.label;
      r.a = entry.interval.a;
      r.b = entry.interval.b;
      r.q = q;
      r.negative_domain = entry.interval.a < 0.0;
      try {
        const double mean_value =
            reference_integral(entry.fn, entry.interval) / entry.interval.width();
        r.lhs_error = std::abs(0.5 * (evaluate(entry.fn, entry.interval.a, 0) +
                                      evaluate(entry.fn, entry.interval.b, 0)) -
                               mean_value);
        const SecondDerivEndpoints d2(std::abs(evaluate(entry.fn, entry.interval.a, 2)),
                                      std::abs(evaluate(entry.fn, entry.interval.b, 2)));
        const BoundBreakdown bb = best_bound(entry.interval, q, d2);
        r.v1 = bb.v1;
        r.v2 = bb.v2;
        r.v2_alt = bound_v2(entry.interval, q, d2, V2Exponent::OneMinusOneOverQ);
        r.v3 = bb.v3;
        r.limit_bound = bound_v2_limit(entry.interval, q, d2);
        r.best = bb.best;
        r.winner = bb.winner;
        r.margin = bb.best - r.lhs_error;
        r.quasiconvex = is_quasiconvex(entry.fn, entry.interval, 2).holds;
        r.violation = r.quasiconvex && r.margin < kViolationThreshold;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

// The two published exponent variants of the v2 factor, compared against the
// actual defect per record. No correctness claim is made for the (q-1)/q
// variant; the counts let the data speak.
struct ExponentExperimentRow {
  std::string label;
  double q = 1.0;
  double lhs_error = 0.0;
  double margin_one_over_q = 0.0;
  double margin_alt = 0.0;
};

struct ExponentExperimentReport {
  std::vector<ExponentExperimentRow> rows;
  int negative_margins_one_over_q = 0;  // among records with the hypothesis met
  int negative_margins_alt = 0;
};

inline ExponentExperimentReport exponent_experiment(const std::vector<CorpusEntry>& corpus,
                                                    const std::vector<double>& q_grid) {
  std::vector<double> qs;
  for (const double q : q_grid)
    if (q > 1.0) qs.push_back(q);
  ExponentExperimentReport rep;
  for (const VerificationRecord& r : sweep(corpus, qs)) {
    if (r.error) continue;
    ExponentExperimentRow row;
    row.label = r.label;
    row.q = r.q;
    row.lhs_error = r.lhs_error;
    row.margin_one_over_q = r.v2 - r.lhs_error;
    row.margin_alt = r.v2_alt - r.lhs_error;
    if (r.quasiconvex) {
      if (row.margin_one_over_q < 0.0) ++rep.negative_margins_one_over_q;
      if (row.margin_alt < 0.0) ++rep.negative_margins_alt;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// phi(q) = (2/((q+1)(q+2)))^{1/q} must equal 1/3 at q = 1 and stay strictly
// inside (1/3, 1) for q > 1. The boundary case is equality, not strictness.
struct SandwichReport {
  struct Row {
    double q;
    double phi;
  };
  std::vector<Row> rows;
  bool equality_at_one_ok = true;
  bool strict_bounds_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return equality_at_one_ok && strict_bounds_ok; }
};

inline SandwichReport sandwich_check(const std::vector<double>& q_grid) {
  SandwichReport rep;
  for (const double q : q_grid) {
    if (!(q >= 1.0)) throw std::domain_error("sandwich_check: q_grid must lie in [1, inf)");
    const double phi = v2_shape_factor(q);
    rep.rows.push_back({q, phi});
    std::ostringstream msg;
    if (q == 1.0) {
      if (!(std::abs(phi - 1.0 / 3.0) <= 1e-15)) {
        rep.equality_at_one_ok = false;
        msg << "phi(1) = " << phi << " != 1/3";
        rep.failures.push_back(msg.str());
      }
    } else if (!(phi > 1.0 / 3.0 && phi < 1.0)) {
      rep.strict_bounds_ok = false;
      msg << "phi(" << q << ") = " << phi << " outside (1/3, 1)";
      rep.failures.push_back(msg.str());
    }
  }
  return rep;
}

// With a shared supremum M, records which of the v1/v2 sup-forms is smaller
// per q. Deliberately assertion-free: near the v1 validity frontier v2 wins,
// for larger q v1 does.
struct CaseTwoRow {
  double q;
  double v1_sup;
  double v2_sup;
  BoundKind smaller;
};

inline std::vector<CaseTwoRow> case_two_comparison(const Interval& iv, double sup_m,
                                                   const std::vector<double>& q_grid) {
  std::vector<CaseTwoRow> rows;
  for (const double q : q_grid) {
    if (!(q > 1.0)) continue;
    const HolderPair hp(q);
    if (!hp.v1_valid()) continue;
    const double s1 = sup_bound(BoundKind::V1, iv, hp, sup_m);
    const double s2 = bound_v2(iv, q, SecondDerivEndpoints(sup_m, sup_m));
    rows.push_back({q, s1, s2, s1 <= s2 ? BoundKind::V1 : BoundKind::V2});
  }
  return rows;
}

struct LemmaRow {
  std::string label;
  double residual = 0.0;
  std::optional<std::string> error;
};

// Everything the `verify` command emits, in one deterministic bundle.
struct VerifyReport {
  std::vector<double> q_grid;
  std::vector<VerificationRecord> records;
  std::vector<LemmaRow> lemma;
  SandwichReport sandwich;
  ExponentExperimentReport exponent;
  std::vector<CaseTwoRow> case_two;
  int violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  double mean_margin = 0.0;

  bool clean() const { return violations == 0 && sandwich.ok(); }
};

inline VerifyReport run_verify(const std::vector<CorpusEntry>& corpus,
                               const std::vector<double>& q_grid) {
  VerifyReport rep;
  rep.q_grid = q_grid;
  rep.records = sweep(corpus, q_grid);
  double margin_sum = 0.0;
  int counted = 0;
  for (const auto& r : rep.records) {
    if (r.violation) ++rep.violations;
    if (!r.error && r.quasiconvex) {
      rep.min_margin = std::min(rep.min_margin, r.margin);
      margin_sum += r.margin;
      ++counted;
    }
  }
  if (counted > 0) rep.mean_margin = margin_sum / counted;
  for (const auto& entry : corpus) {
    LemmaRow row;
    row.label = entry.fn.label;
    try {
      row.residual = lemma_identity_residual(entry.fn, entry.interval);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rep.lemma.push_back(std::move(row));
  }
  rep.sandwich = sandwich_check(q_grid);
  rep.exponent = exponent_experiment(corpus, q_grid);
  rep.case_two = case_two_comparison(Interval(0.0, 1.0), 1.0, q_grid);
  return rep;
}

}  // namespace iyengar
