// Command-line front end: closed-form defect bounds, certified trapezoid
// integration, special-means checks, and the verification harness.
//
// Exit codes: 0 success, 1 domain/validity error, 2 violation or failed
// check, 64 usage error, 70 oracle failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iyengar/iyengar.hpp"

namespace {

using iyengar::fmt17;
using iyengar::json;

enum ExitCode { kOk = 0, kDomainError = 1, kCheckFailed = 2, kUsage = 64, kOracleFailure = 70 };

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + out_path);
  out << text;
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad q-grid entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty q-grid");
  return out;
}

std::string verdict_text(const iyengar::QuasiconvexVerdict& v) {
  if (v.holds) return "grid-certified (n=" + std::to_string(v.grid_size) + ")";
  std::ostringstream out;
  out << "grid violation at (" << fmt17((*v.witness)[0]) << ", " << fmt17((*v.witness)[1]) << ", "
      << fmt17((*v.witness)[2]) << ")";
  return out.str();
}

int run_bound(double a, double b, double q, double d2a, double d2b, const std::string& format,
              const std::string& out_path) {
  const iyengar::Interval iv(a, b);
  const iyengar::SecondDerivEndpoints d2(d2a, d2b);
  const iyengar::BoundBreakdown bb = iyengar::best_bound(iv, q, d2);
  std::ostringstream out;
  if (format == "json") {
    json j = iyengar::to_json(bb);
    j["a"] = a;
    j["b"] = b;
    j["q"] = q;
    j["d2a"] = d2a;
    j["d2b"] = d2b;
    j["negative_domain"] = a < 0.0;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "a,b,q,d2a,d2b,v1,v2,v3,best,winner\n"
        << fmt17(a) << ',' << fmt17(b) << ',' << fmt17(q) << ',' << fmt17(d2a) << ','
        << fmt17(d2b) << ',' << (bb.v1 ? fmt17(*bb.v1) : "") << ',' << fmt17(bb.v2) << ','
        << (bb.v3 ? fmt17(*bb.v3) : "") << ',' << fmt17(bb.best) << ','
        << iyengar::to_string(bb.winner) << "\n";
  } else {
    out << "v1      " << (bb.v1 ? fmt17(*bb.v1) : "(not defined for this q)") << "\n";
    out << "v2      " << fmt17(bb.v2) << "\n";
    out << "v3      " << (bb.v3 ? fmt17(*bb.v3) : "(not defined for this q)") << "\n";
    out << "best    " << fmt17(bb.best) << " (" << iyengar::to_string(bb.winner) << ")\n";
    if (a < 0.0) out << "note    a < 0: outside the bounds' stated domain\n";
  }
  emit(out.str(), out_path);
  return kOk;
}

int run_integrate(const std::string& fn, double a, double b, double q, double eps,
                  std::size_t max_n, const std::string& format, const std::string& out_path) {
  const iyengar::FunctionSpec f = iyengar::parse_function(fn);
  const iyengar::Interval iv(a, b);
  const iyengar::CertifiedResult res = iyengar::integrate_certified(f, iv, q, eps, max_n);
  std::ostringstream out;
  if (format == "json") {
    json j = iyengar::to_json(res);
    j["fn"] = fn;
    j["a"] = a;
    j["b"] = b;
    j["eps"] = eps;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "fn,a,b,q,eps,value,certificate,intervals,refinements,quasiconvex\n"
        << fn << ',' << fmt17(a) << ',' << fmt17(b) << ',' << fmt17(q) << ',' << fmt17(eps) << ','
        << fmt17(res.value) << ',' << fmt17(res.certificate.total) << ','
        << res.partition.intervals() << ',' << res.refinements << ','
        << (res.quasiconvex.holds ? "true" : "false") << "\n";
  } else {
    out << "value        " << fmt17(res.value) << "\n";
    out << "certificate  " << fmt17(res.certificate.total) << "\n";
    out << "intervals    " << res.partition.intervals() << "\n";
    out << "refinements  " << res.refinements << "\n";
    out << "quasiconvex  " << verdict_text(res.quasiconvex) << "\n";
  }
  emit(out.str(), out_path);
  return kOk;
}

int run_means(const std::string& prop, double na, double nb, int n, double q,
              const std::string& format, const std::string& out_path) {
  const iyengar::MeansCheckRecord rec =
      iyengar::check_means_proposition(iyengar::parse_means_proposition(prop), na, nb, n, q);
  std::ostringstream out;
  if (format == "json") {
    out << iyengar::to_json(rec).dump(2) << "\n";
  } else if (format == "csv") {
    out << "proposition,a,b,n,q,lhs,rhs,margin,holds,quasiconvex_grid\n"
        << iyengar::to_string(rec.proposition) << ',' << fmt17(rec.a) << ',' << fmt17(rec.b) << ','
        << rec.n << ',' << fmt17(rec.q) << ',' << fmt17(rec.lhs) << ',' << fmt17(rec.rhs) << ','
        << fmt17(rec.margin) << ',' << (rec.holds ? "true" : "false") << ','
        << (rec.quasiconvex_grid ? "true" : "false") << "\n";
  } else {
    out << iyengar::to_string(rec.proposition) << ": a=" << fmt17(rec.a) << " b=" << fmt17(rec.b)
        << " n=" << rec.n << " q=" << fmt17(rec.q) << "\n";
    out << "lhs     " << fmt17(rec.lhs) << "\n";
    out << "rhs     " << fmt17(rec.rhs) << "\n";
    out << "margin  " << fmt17(rec.margin) << "\n";
    out << "holds   " << (rec.holds ? "true" : "false") << "\n";
  }
  emit(out.str(), out_path);
  return rec.holds ? kOk : kCheckFailed;
}

int run_verify(const std::string& corpus_path, const std::string& q_grid_csv,
               const std::string& format, const std::string& out_path) {
  const std::vector<iyengar::CorpusEntry> corpus = iyengar::load_corpus(corpus_path);
  const std::vector<double> q_grid = parse_grid(q_grid_csv);
  const iyengar::VerifyReport rep = iyengar::run_verify(corpus, q_grid);
  if (format == "json") {
    emit(iyengar::to_json(rep).dump(2) + "\n", out_path);
  } else if (format == "csv") {
    emit(iyengar::to_csv(rep.records), out_path);
  } else {
    emit(iyengar::human_summary(rep), out_path);
  }
  return rep.clean() ? kOk : kCheckFailed;
}

int run_corpus(const std::string& corpus_path, const std::string& format,
               const std::string& out_path) {
  const std::vector<iyengar::CorpusEntry> corpus = iyengar::load_corpus(corpus_path);
  std::ostringstream out;
  if (format == "json") {
    json arr = json::array();
    for (const auto& e : corpus) {
      arr.push_back({{"label", e.fn.label},
                     {"selector", iyengar::selector_of(e.fn)},
                     {"a", e.interval.a},
                     {"b", e.interval.b}});
    }
    out << arr.dump(2) << "\n";
  } else if (format == "csv") {
    out << "label,selector,a,b\n";
    for (const auto& e : corpus)
      out << e.fn.label << ',' << iyengar::selector_of(e.fn) << ',' << fmt17(e.interval.a) << ','
          << fmt17(e.interval.b) << "\n";
  } else {
    for (const auto& e : corpus)
      out << e.fn.label << "\t" << iyengar::selector_of(e.fn) << "\t[" << fmt17(e.interval.a)
          << ", " << fmt17(e.interval.b) << "]\n";
  }
  emit(out.str(), out_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified trapezoid-rule error bounds for functions with quasi-convex |f''|^q"};
  app.require_subcommand(1);

  std::string format = "human";
  std::string out_path;
  double a = 0.0, b = 1.0, q = 1.0, d2a = 0.0, d2b = 0.0, eps = 1e-6;
  double na = 0.0, nb = 1.0;
  int n = 2;
  std::size_t max_n = std::size_t{1} << 20;
  std::string fn, prop = "P6", corpus_path, q_grid_csv = "1,1.5,1.75,2,3,5,10";

  CLI::App* cmd_bound = app.add_subcommand("bound", "evaluate the defect bounds v1, v2, v3");
  cmd_bound->add_option("--a", a, "interval lower endpoint")->required();
  cmd_bound->add_option("--b", b, "interval upper endpoint")->required();
  cmd_bound->add_option("--q", q, "exponent q >= 1")->required();
  cmd_bound->add_option("--d2a", d2a, "|f''(a)|")->required();
  cmd_bound->add_option("--d2b", d2b, "|f''(b)|")->required();

  CLI::App* cmd_integrate =
      app.add_subcommand("integrate", "trapezoid integration with an a-priori certificate");
  cmd_integrate->add_option("--fn", fn, "function selector, e.g. poly:0,0,1")->required();
  cmd_integrate->add_option("--a", a, "interval lower endpoint")->required();
  cmd_integrate->add_option("--b", b, "interval upper endpoint")->required();
  cmd_integrate->add_option("--q", q, "exponent q >= 1")->capture_default_str();
  cmd_integrate->add_option("--eps", eps, "certificate target")->required();
  cmd_integrate->add_option("--max-n", max_n, "refinement budget (max subintervals)")
      ->capture_default_str();

  CLI::App* cmd_means = app.add_subcommand("means", "check one mean-gap proposition");
  cmd_means->add_option("--prop", prop, "P5, P6 or P7")->required();
  cmd_means->add_option("--na", na, "mean argument a")->required();
  cmd_means->add_option("--nb", nb, "mean argument b")->required();
  cmd_means->add_option("--n", n, "power n >= 2")->required();
  cmd_means->add_option("--q", q, "exponent q")->required();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "sweep the corpus and verify every bound against the oracle");
  cmd_verify->add_option("--corpus", corpus_path, "corpus manifest path (default: built-in)");
  cmd_verify->add_option("--q-grid", q_grid_csv, "comma-separated q values")
      ->capture_default_str();

  CLI::App* cmd_corpus = app.add_subcommand("corpus", "list the shipped corpus");
  cmd_corpus->add_option("--corpus", corpus_path, "corpus manifest path (default: built-in)");

  for (CLI::App* sub : {cmd_bound, cmd_integrate, cmd_means, cmd_verify, cmd_corpus}) {
    sub->add_option("--format", format, "output format: human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write output to this path instead of stdout");
  }

  int status = kOk;
  cmd_bound->callback([&]() { status = run_bound(a, b, q, d2a, d2b, format, out_path); });
  cmd_integrate->callback(
      [&]() { status = run_integrate(fn, a, b, q, eps, max_n, format, out_path); });
  cmd_means->callback([&]() { status = run_means(prop, na, nb, n, q, format, out_path); });
  cmd_verify->callback(
      [&]() { status = run_verify(corpus_path, q_grid_csv, format, out_path); });
  cmd_corpus->callback([&]() { status = run_corpus(corpus_path, format, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const iyengar::oracle_error& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return kOracleFailure;
  } catch (const iyengar::budget_exhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "best certificate " << fmt17(e.best.certificate.total) << " at "
              << e.best.partition.intervals() << " intervals\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return status;
}
