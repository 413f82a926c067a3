#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "iyengar/bounds.hpp"
#include "iyengar/means.hpp"
#include "iyengar/quadrature.hpp"
#include "iyengar/verify.hpp"

// Machine-readable renderings of the library's result types. JSON uses
// nlohmann's shortest-round-trip double formatting; CSV and human output
// print 17 significant digits. Field names are part of the stable interface
// and documented in the README.

namespace iyengar {

using json = nlohmann::json;

// %.17g: enough digits that parsing the text recovers the exact double.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline json to_json(const BoundBreakdown& bb) {
  json j;
  j["v1"] = bb.v1 ? json(*bb.v1) : json(nullptr);
  j["v2"] = bb.v2;
  j["v3"] = bb.v3 ? json(*bb.v3) : json(nullptr);
  j["best"] = bb.best;
  j["winner"] = to_string(bb.winner);
  return j;
}

inline json to_json(const QuasiconvexVerdict& v) {
  json j;
  j["holds"] = v.holds;
  j["grid_size"] = v.grid_size;
  j["tolerance"] = v.tolerance;
  if (v.witness)
    j["witness"] = {(*v.witness)[0], (*v.witness)[1], (*v.witness)[2]};
  else
    j["witness"] = nullptr;
  return j;
}

inline json to_json(const Certificate& c) {
  json j;
  j["total"] = c.total;
  j["q"] = c.q;
  j["method"] = "trapezoid";
  json entries = json::array();
  for (const auto& e : c.per_interval) {
    entries.push_back({{"index", e.index},
                       {"width", e.width},
                       {"local_bound", e.local_bound},
                       {"winner", to_string(e.winner)}});
  }
  j["per_interval"] = std::move(entries);
  return j;
}

inline json to_json(const CertifiedResult& r) {
  json j;
  j["value"] = r.value;
  j["certificate"] = to_json(r.certificate);
  j["intervals"] = r.partition.intervals();
  j["refinements"] = r.refinements;
  j["quasiconvex"] = to_json(r.quasiconvex);
  return j;
}

inline json to_json(const MeansCheckRecord& r) {
  json j;
  j["proposition"] = to_string(r.proposition);
  j["a"] = r.a;
  j["b"] = r.b;
  j["n"] = r.n;
  j["q"] = r.q;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  j["margin"] = r.margin;
  j["quasiconvex_grid"] = r.quasiconvex_grid;
  return j;
}

inline json to_json(const VerificationRecord& r) {
  json j;
  j["label"] = r.label;
  j["a"] = r.a;
  j["b"] = r.b;
  j["q"] = r.q;
  j["lhs_error"] = r.lhs_error;
  j["v1"] = r.v1 ? json(*r.v1) : json(nullptr);
  j["v2"] = r.v2;
  j["v2_alt"] = r.v2_alt;
  j["v3"] = r.v3 ? json(*r.v3) : json(nullptr);
  j["limit_bound"] = r.limit_bound;
  j["best"] = r.best;
  j["winner"] = to_string(r.winner);
  j["margin"] = r.margin;
  j["quasiconvex"] = r.quasiconvex;
  j["negative_domain"] = r.negative_domain;
  j["violation"] = r.violation;
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  return j;
}

inline json to_json(const VerifyReport& rep) {
  json j;
  j["schema_version"] = 1;
  j["q_grid"] = rep.q_grid;
  json records = json::array();
  for (const auto& r : rep.records) records.push_back(to_json(r));
  j["records"] = std::move(records);
  json lemma = json::array();
  for (const auto& row : rep.lemma) {
    lemma.push_back({{"label", row.label},
                     {"residual", row.residual},
                     {"error", row.error ? json(*row.error) : json(nullptr)}});
  }
  j["lemma"] = std::move(lemma);
  json sandwich;
  sandwich["equality_at_one_ok"] = rep.sandwich.equality_at_one_ok;
  sandwich["strict_bounds_ok"] = rep.sandwich.strict_bounds_ok;
  sandwich["failures"] = rep.sandwich.failures;
  json phi_rows = json::array();
  for (const auto& row : rep.sandwich.rows) phi_rows.push_back({{"q", row.q}, {"phi", row.phi}});
  sandwich["rows"] = std::move(phi_rows);
  j["sandwich"] = std::move(sandwich);
  json exponent;
  exponent["negative_margins_one_over_q"] = rep.exponent.negative_margins_one_over_q;
  exponent["negative_margins_alt"] = rep.exponent.negative_margins_alt;
  json exp_rows = json::array();
  for (const auto& row : rep.exponent.rows) {
    exp_rows.push_back({{"label", row.label},
                        {"q", row.q},
                        {"lhs_error", row.lhs_error},
                        {"margin_one_over_q", row.margin_one_over_q},
                        {"margin_alt", row.margin_alt}});
  }
  exponent["rows"] = std::move(exp_rows);
  j["exponent_experiment"] = std::move(exponent);
  json case_two = json::array();
  for (const auto& row : rep.case_two) {
    case_two.push_back({{"q", row.q},
                        {"v1_sup", row.v1_sup},
                        {"v2_sup", row.v2_sup},
                        {"smaller", to_string(row.smaller)}});
  }
  j["case_two"] = std::move(case_two);
  j["summary"] = {{"records", rep.records.size()},
                  {"violations", rep.violations},
                  {"min_margin", rep.min_margin},
                  {"mean_margin", rep.mean_margin},
                  {"clean", rep.clean()}};
  return j;
}

// CSV of the sweep records, one row per record, stable column order.
inline std::string to_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream out;
  out << "label,a,b,q,lhs_error,v1,v2,v2_alt,v3,limit_bound,best,winner,margin,"
         "quasiconvex,negative_domain,violation,error\n";
  for (const auto& r : records) {
    out << r.label << ',' << fmt17(r.a) << ',' << fmt17(r.b) << ',' << fmt17(r.q) << ','
        << fmt17(r.lhs_error) << ',' << (r.v1 ? fmt17(*r.v1) : "") << ',' << fmt17(r.v2) << ','
        << fmt17(r.v2_alt) << ',' << (r.v3 ? fmt17(*r.v3) : "") << ',' << fmt17(r.limit_bound)
        << ',' << fmt17(r.best) << ',' << to_string(r.winner) << ',' << fmt17(r.margin) << ','
        << (r.quasiconvex ? "true" : "false") << ',' << (r.negative_domain ? "true" : "false")
        << ',' << (r.violation ? "true" : "false") << ',' << (r.error ? *r.error : "") << '\n';
  }
  return out.str();
}

inline std::string human_summary(const VerifyReport& rep) {
  std::ostringstream out;
  out << "verification sweep: " << rep.records.size() << " records, " << rep.violations
      << " violations\n";
  out << "  min margin  " << fmt17(rep.min_margin) << "\n";
  out << "  mean margin " << fmt17(rep.mean_margin) << "\n";
  double max_residual = 0.0;
  for (const auto& row : rep.lemma)
    if (!row.error) max_residual = std::max(max_residual, row.residual);
  out << "identity residual: max " << fmt17(max_residual) << " over " << rep.lemma.size()
      << " functions\n";
  out << "shape factor phi: equality at q=1 " << (rep.sandwich.equality_at_one_ok ? "ok" : "FAIL")
      << ", strict bounds " << (rep.sandwich.strict_bounds_ok ? "ok" : "FAIL") << "\n";
  out << "exponent experiment: negative margins 1/q = "
      << rep.exponent.negative_margins_one_over_q
      << ", (q-1)/q = " << rep.exponent.negative_margins_alt << "\n";
  out << "sup-form comparison (M shared):";
  for (const auto& row : rep.case_two) out << " q=" << row.q << "->" << to_string(row.smaller);
  out << "\n";
  out << (rep.clean() ? "CLEAN" : "NOT CLEAN") << "\n";
  return out.str();
}

}  // namespace iyengar
