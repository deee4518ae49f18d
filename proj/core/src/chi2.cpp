#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bpistego/error.hpp"
#include "bpistego/steganalysis.hpp"

namespace bpistego {
namespace {

constexpr int kMaxIterations = 1000;
constexpr double kEpsilon = 1e-15;

// Lower regularized gamma P(a, x) by its power series; converges quickly
// for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEpsilon) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a, x) by its continued fraction (modified
// Lentz); used for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEpsilon;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw InvalidArgument("gamma shape must be positive");
  if (!(x >= 0.0)) throw InvalidArgument("gamma argument must be >= 0");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_continued_fraction(a, x);
}

double chi2_cdf_complement(double statistic, int df) {
  if (df < 1) {
    throw InvalidArgument("chi-square degrees of freedom must be >= 1, got " +
                          std::to_string(df));
  }
  if (!(statistic >= 0.0)) {
    throw InvalidArgument("chi-square statistic must be >= 0");
  }
  const double q = regularized_gamma_q(0.5 * df, 0.5 * statistic);
  return std::clamp(q, 0.0, 1.0);
}

}  // namespace bpistego
