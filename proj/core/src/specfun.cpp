#include "xop/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "xop/errors.hpp"

namespace xop {

namespace {

void require_positive_x(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << who << ": argument x must be positive and finite (got " << x << ")";
    throw DomainError(msg.str());
  }
}

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 100000;

// Regularized lower series: gamma(a, x) * exp(x) * x^(-a).
double lower_series_scaled(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) return sum;
  }
  throw ConvergenceError("incomplete gamma series did not converge", sum, std::abs(term));
}

// Modified Lentz evaluation of the continued fraction for
// Gamma(a, x) * exp(x) * x^(-a), valid for x > a + 1.
double upper_fraction_scaled(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h;
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge", h, 0.0);
}

}  // namespace

double gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma: NaN argument");
  if (x <= 0.0 && x == std::floor(x)) {
    std::ostringstream msg;
    msg << "gamma: pole at non-positive integer " << x;
    throw DomainError(msg.str());
  }
  return std::tgamma(x);
}

double upper_incomplete_gamma(double a, double x, const QuadratureSpec& spec) {
  require_positive_x(x, "upper_incomplete_gamma");
  if (!std::isfinite(a)) throw DomainError("upper_incomplete_gamma: parameter a must be finite");

  const double log_prefactor = a * std::log(x) - x;
  if (a > 0.0) {
    if (x > a + 1.0) return std::exp(log_prefactor) * upper_fraction_scaled(a, x);
    return gamma(a) - std::exp(log_prefactor) * lower_series_scaled(a, x);
  }

  // a <= 0: Gamma(a, x) = e^(-x) int_0^inf (x + u)^(a-1) e^(-u) du.
  const QuadResult r = integrate([a, x](double u) { return std::pow(x + u, a - 1.0) * std::exp(-u); },
                                 Interval{0.0, std::numeric_limits<double>::infinity()}, spec);
  return std::exp(-x) * r.value;
}

double exp_integral_e(double a, double x, const QuadratureSpec& spec) {
  require_positive_x(x, "exp_integral_e");
  if (!std::isfinite(a)) throw DomainError("exp_integral_e: parameter a must be finite");
  // E_a(x) = e^(-x) int_0^inf e^(-x v) (1 + v)^(-a) dv
  const QuadResult r = integrate([a, x](double v) { return std::exp(-x * v - a * std::log1p(v)); },
                                 Interval{0.0, std::numeric_limits<double>::infinity()}, spec);
  return std::exp(-x) * r.value;
}

double appell_f1(double a, double b1, double b2, double c, double x, double y, const QuadratureSpec& spec) {
  if (!(a > 0.0) || !(c > a)) {
    std::ostringstream msg;
    msg << "appell_f1: integral representation requires c > a > 0 (a = " << a << ", c = " << c << ")";
    throw DomainError(msg.str());
  }
  if (!(x < 1.0) || !(y < 1.0)) {
    throw DomainError("appell_f1: integral representation requires x < 1 and y < 1");
  }
  const QuadResult r = integrate_nodes(
      [=](const QuadNode& n) {
        const double t = n.x;
        return std::pow(n.from_lower, a - 1.0) * std::pow(n.from_upper, c - a - 1.0) *
               std::pow(1.0 - x * t, -b1) * std::pow(1.0 - y * t, -b2);
      },
      Interval{0.0, 1.0}, spec);
  const double norm = std::exp(std::lgamma(c) - std::lgamma(a) - std::lgamma(c - a));
  return norm * r.value;
}

}  // namespace xop
