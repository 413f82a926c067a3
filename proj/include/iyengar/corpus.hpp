#pragma once

#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "iyengar/functions.hpp"
#include "iyengar/interval.hpp"

// Function selectors and the corpus manifest.
//
// Selector grammar (also used by the CLI --fn flag):
//   poly:c0,c1,...   polynomial sum c_i x^i
//   exp:scale,rate   scale * e^{rate x}
//   recip:shift      1/(x + shift)
//   pieceg           the piecewise quasi-convex example on [-2, 2]
//
// Manifest format: one function per line,
//   <selector> <a> <b> <label>
// '#' starts a comment; blank lines are skipped.

namespace iyengar {

struct CorpusEntry {
  FunctionSpec fn;
  Interval interval;
};

namespace detail {

inline std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("selector: bad numeric parameter '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v))
      throw std::invalid_argument("selector: bad numeric parameter '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline FunctionSpec parse_function(const std::string& selector) {
  const auto colon = selector.find(':');
  const std::string head = selector.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : selector.substr(colon + 1);
  if (head == "pieceg") {
    if (!tail.empty()) throw std::invalid_argument("selector: pieceg takes no parameters");
    return {PiecewiseG{}, selector};
  }
  const std::vector<double> params = detail::parse_params(tail);
  if (head == "poly") {
    if (params.empty()) throw std::invalid_argument("selector: poly needs coefficients");
    return make_polynomial(params, selector);
  }
  if (head == "exp") {
    if (params.size() != 2) throw std::invalid_argument("selector: exp needs scale,rate");
    return {Exponential{params[0], params[1]}, selector};
  }
  if (head == "recip") {
    if (params.size() != 1) throw std::invalid_argument("selector: recip needs shift");
    return {Reciprocal{params[0]}, selector};
  }
  throw std::invalid_argument("selector: unknown family '" + head + "'");
}

inline std::string selector_of(const FunctionSpec& f) {
  std::ostringstream out;
  out.precision(17);
  if (const auto* poly = std::get_if<Polynomial>(&f.family)) {
    out << "poly:";
    for (std::size_t i = 0; i < poly->coeffs.size(); ++i)
      out << (i ? "," : "") << poly->coeffs[i];
  } else if (const auto* ex = std::get_if<Exponential>(&f.family)) {
    out << "exp:" << ex->scale << "," << ex->rate;
  } else if (const auto* re = std::get_if<Reciprocal>(&f.family)) {
    out << "recip:" << re->shift;
  } else {
    out << "pieceg";
  }
  return out.str();
}

inline std::vector<CorpusEntry> parse_corpus_manifest(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string selector;
    if (!(ss >> selector)) continue;  // blank or comment-only
    double a = 0.0, b = 0.0;
    std::string label;
    if (!(ss >> a >> b >> label))
      throw std::invalid_argument("corpus manifest line " + std::to_string(lineno) +
                                  ": expected '<selector> <a> <b> <label>'");
    FunctionSpec fn = parse_function(selector);
    fn.label = label;
    out.push_back({std::move(fn), Interval(a, b)});
  }
  return out;
}

// Shipped corpus: every entry is twice differentiable with analytically
// quasi-convex |f''| (constant, monotone, or valley-shaped), so soundness
// checks never rest on grid verdicts alone.
inline std::vector<CorpusEntry> builtin_corpus() {
  const auto entry = [](const char* selector, double a, double b, const char* label) {
    FunctionSpec fn = parse_function(selector);
    fn.label = label;
    return CorpusEntry{std::move(fn), Interval(a, b)};
  };
  std::vector<CorpusEntry> out;
  out.push_back(entry("poly:0,0,1", 0.0, 1.0, "x2_unit"));         // |f''| = 2 constant
  out.push_back(entry("poly:0,0,0,1", 1.0, 2.0, "x3_right"));      // |f''| = 6x increasing
  out.push_back(entry("poly:0,0,0,0,1", 0.0, 1.0, "x4_unit"));     // |f''| = 12x^2 increasing
  out.push_back(entry("poly:1,1", 0.0, 5.0, "affine"));            // f'' = 0
  out.push_back(entry("poly:0,0,0,1", -1.0, 1.0, "x3_sym"));       // |f''| = 6|x| valley, a < 0
  out.push_back(entry("exp:1,1", 0.0, 1.0, "exp_up"));             // |f''| = e^x increasing
  out.push_back(entry("exp:2,-1", 0.0, 1.0, "exp_down"));          // |f''| = 2e^-x decreasing
  out.push_back(entry("recip:1", 0.0, 2.0, "recip_shift1"));       // |f''| = 2/(1+x)^3 decreasing
  return out;
}

// Corpus used by the CLI: explicit path, else $IYENGAR_CORPUS, else builtin.
inline std::vector<CorpusEntry> load_corpus(const std::string& path_override = "") {
  std::string path = path_override;
  if (path.empty()) {
    if (const char* env = std::getenv("IYENGAR_CORPUS")) path = env;
  }
  if (path.empty()) return builtin_corpus();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus manifest: " + path);
  return parse_corpus_manifest(in);
}

}  // namespace iyengar
