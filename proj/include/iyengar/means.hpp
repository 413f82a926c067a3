#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "iyengar/bounds.hpp"
#include "iyengar/functions.hpp"
#include "iyengar/interval.hpp"

// Special means and the three mean-gap checks for f(x) = x^n, n >= 2. The
// gap |A(a^n, b^n) - L_n^n(a, b)| is exactly the trapezoid defect of x^n on
// [a, b], so each check pits it against one of the bound families with
// endpoint data |a|^{n-2}, |b|^{n-2} and the n(n-1) factor pulled out front.

namespace iyengar {

inline double arithmetic_mean(double a, double b) { return 0.5 * (a + b); }

// L(a, b) = (a - b)/(ln|a| - ln|b|); needs |a| != |b| and a, b != 0.
inline double logarithmic_mean(double a, double b) {
  if (a == 0.0 || b == 0.0) throw std::domain_error("logarithmic_mean: zero argument");
  if (std::abs(a) == std::abs(b)) throw std::domain_error("logarithmic_mean: requires |a| != |b|");
  return (a - b) / (std::log(std::abs(a)) - std::log(std::abs(b)));
}

// L_n(a, b) = [(b^{n+1} - a^{n+1}) / ((n+1)(b-a))]^{1/n}, integer n not in
// {-1, 0}, a != b. L_n^n is the mean value of x^n over [a, b].
inline double generalized_log_mean(double a, double b, int n) {
  if (n == -1 || n == 0) throw std::domain_error("generalized_log_mean: n must not be -1 or 0");
  if (a == b) throw std::domain_error("generalized_log_mean: requires a != b");
  const double bracket =
      (std::pow(b, n + 1) - std::pow(a, n + 1)) / ((n + 1.0) * (b - a));
  if (bracket > 0.0) return std::pow(bracket, 1.0 / n);
  if (bracket == 0.0) {
    if (n > 0) return 0.0;
    throw std::domain_error("generalized_log_mean: zero bracket with negative n");
  }
  if (n % 2 != 0) return -std::pow(-bracket, 1.0 / n);
  throw std::domain_error("generalized_log_mean: even root of a negative bracket");
}

// The three proposition checks, one per bound family: P5 -> v1, P6 -> v2,
// P7 -> v3.
enum class MeansProposition { P5, P6, P7 };

inline const char* to_string(MeansProposition p) {
  switch (p) {
    case MeansProposition::P5: return "P5";
    case MeansProposition::P6: return "P6";
    case MeansProposition::P7: return "P7";
  }
  return "?";
}

inline MeansProposition parse_means_proposition(const std::string& s) {
  if (s == "P5" || s == "p5") return MeansProposition::P5;
  if (s == "P6" || s == "p6") return MeansProposition::P6;
  if (s == "P7" || s == "p7") return MeansProposition::P7;
  throw std::invalid_argument("unknown proposition '" + s + "' (expected P5, P6 or P7)");
}

struct MeansCheckRecord {
  MeansProposition proposition;
  double a;
  double b;
  int n;
  double q;
  double lhs;              // |A(a^n, b^n) - L_n^n(a, b)|
  double rhs;              // n(n-1)(b-a)^2-scaled bound with |.|^{n-2} endpoint data
  bool holds;              // margin >= -1e-12
  double margin;           // rhs - lhs
  bool quasiconvex_grid;   // grid verdict for |d^2/dx^2 x^n| on [a, b]
};

inline constexpr double kMeansHoldTolerance = 1e-12;

// Validity in q follows the source bound: P5 needs q > 1 + sqrt(2)/2,
// P6 needs q >= 1, P7 needs q > 1; violations surface as the bound
// functions' own domain/validity errors.
inline MeansCheckRecord check_means_proposition(MeansProposition which, double a, double b,
                                                int n, double q) {
  if (!(a < b)) throw std::domain_error("check_means_proposition: requires a < b");
  if (n < 2) throw std::domain_error("check_means_proposition: requires integer n >= 2");
  const Interval iv(a, b);
  const double lhs = std::abs(arithmetic_mean(std::pow(a, n), std::pow(b, n)) -
                              std::pow(generalized_log_mean(a, b, n), n));
  // endpoint data |x|^{n-2}; n = 2 makes the factor identically 1 (0^0 = 1)
  const double ea = n == 2 ? 1.0 : std::pow(std::abs(a), n - 2);
  const double eb = n == 2 ? 1.0 : std::pow(std::abs(b), n - 2);
  const SecondDerivEndpoints d2(ea, eb);
  double kernel = 0.0;
  switch (which) {
    case MeansProposition::P5: kernel = bound_v1(iv, HolderPair(q), d2); break;
    case MeansProposition::P6: kernel = bound_v2(iv, q, d2); break;
    case MeansProposition::P7: kernel = bound_v3(iv, HolderPair(q), d2); break;
  }
  const double rhs = static_cast<double>(n) * static_cast<double>(n - 1) * kernel;
  const double margin = rhs - lhs;

  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  coeffs.back() = 1.0;
  const FunctionSpec xn = make_polynomial(std::move(coeffs), "x^" + std::to_string(n));
  const bool qc = is_quasiconvex(xn, iv, 2).holds;

  return {which, a, b, n, q, lhs, rhs, margin >= -kMeansHoldTolerance, margin, qc};
}

}  // namespace iyengar
