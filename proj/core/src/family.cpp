#include "xop/family.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/specfun.hpp"

namespace xop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void reject(const std::string& family, const std::string& constraint, double alpha, double beta,
                         bool show_beta) {
  std::ostringstream msg;
  msg << family << " requires " << constraint << " (got alpha = " << alpha;
  if (show_beta) msg << ", beta = " << beta;
  msg << ")";
  throw DomainError(msg.str());
}

void check_parameters(FamilyKind kind, double alpha, double beta) {
  const std::string name(family_name(kind));
  if (!std::isfinite(alpha) || !std::isfinite(beta)) reject(name, "finite parameters", alpha, beta, kind == FamilyKind::jacobi);
  switch (kind) {
    case FamilyKind::laguerre_I:
    case FamilyKind::laguerre_II:
      if (!(alpha > 0)) reject(name, "alpha > 0", alpha, beta, false);
      return;
    case FamilyKind::laguerre_III:
      if (!(alpha > -1 && alpha < 0)) reject(name, "-1 < alpha < 0", alpha, beta, false);
      return;
    case FamilyKind::jacobi:
      if (!(alpha > -1)) reject(name, "alpha > -1", alpha, beta, true);
      if (!(beta > -1)) reject(name, "beta > -1", alpha, beta, true);
      if (alpha == beta) reject(name, "alpha != beta", alpha, beta, true);
      if (!((alpha > 0 && beta > 0) || (alpha < 0 && beta < 0))) {
        reject(name, "sgn(alpha) = sgn(beta), both nonzero", alpha, beta, true);
      }
      return;
  }
}

RecursionCoefficients recursion_from(const Polynomial& p, const Polynomial& s, double xi) {
  const ShiftedPolynomial P = to_shifted(p, xi);
  const ShiftedPolynomial A = to_shifted(p.derivative() * 0.5 + s, xi);
  auto at = [](const ShiftedPolynomial& sp, std::size_t i) { return i < sp.coeffs.size() ? sp.coeffs[i] : 0.0; };
  RecursionCoefficients r;
  r.r0 = at(P, 0);
  r.r1 = at(P, 1);
  r.r2 = at(P, 2);
  r.s_m1 = -2.0 * r.r0;
  r.s0 = at(A, 0) - 2.0 * r.r1;
  r.s1 = at(A, 1) - 2.0 * r.r2;
  return r;
}

// x^a with x given as a distance; 0^a for a > 0 is 0.
double power(double base, double exponent) { return exponent == 0.0 ? 1.0 : std::pow(base, exponent); }

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::laguerre_I: return "lag1";
    case FamilyKind::laguerre_II: return "lag2";
    case FamilyKind::laguerre_III: return "lag3";
    case FamilyKind::jacobi: return "jacobi";
  }
  return "unknown";
}

FamilyKind parse_family(std::string_view name) {
  for (FamilyKind k : {FamilyKind::laguerre_I, FamilyKind::laguerre_II, FamilyKind::laguerre_III, FamilyKind::jacobi}) {
    if (family_name(k) == name) return k;
  }
  throw DomainError("unknown family '" + std::string(name) + "' (expected lag1, lag2, lag3 or jacobi)");
}

bool is_laguerre(FamilyKind kind) { return kind != FamilyKind::jacobi; }

double FamilyDescriptor::weight(double x) const {
  if (!(x > interval.lower && x < interval.upper)) return 0.0;
  return weight(QuadNode{x, x - interval.lower, interval.upper - x});
}

double FamilyDescriptor::weight(const QuadNode& node) const {
  const double d = eta(node.x);
  if (kind == FamilyKind::jacobi) {
    // eta = ((beta - alpha) x - (alpha + beta)) / 2, so 4 / ((beta-alpha)x-(alpha+beta))^2 = 1 / eta^2.
    return power(node.from_upper, alpha) * power(node.from_lower, beta) / (d * d);
  }
  // x^alpha e^(-x) in log form so that far nodes underflow to 0 instead of inf * 0.
  return std::exp(alpha * std::log(node.from_lower) - node.x) / (d * d);
}

double FamilyDescriptor::lower_exponent() const { return kind == FamilyKind::jacobi ? beta : alpha; }

double FamilyDescriptor::upper_exponent() const { return kind == FamilyKind::jacobi ? alpha : 0.0; }

bool FamilyDescriptor::admissible(int n) const { return n >= 0 && n != excluded_degree(); }

int FamilyDescriptor::excluded_degree() const { return kind == FamilyKind::laguerre_III ? 1 : 0; }

void FamilyDescriptor::require_admissible(int n) const {
  if (admissible(n)) return;
  std::ostringstream msg;
  msg << "degree " << n << " is not part of the " << family_name(kind) << " sequence";
  if (n >= 0) msg << " (degree " << excluded_degree() << " is missing)";
  throw InadmissibleDegree(msg.str());
}

double FamilyDescriptor::e0() const {
  const Polynomial de = eta.derivative();
  return p(xi) * de.derivative()(xi) + p.derivative()(xi) * de(xi) / 2.0 - s(xi) * de(xi);
}

double FamilyDescriptor::e1() const { return 2.0 * p(xi) * eta.derivative()(xi); }

FamilyDescriptor make_family(FamilyKind kind, double alpha, std::optional<double> beta) {
  if (kind == FamilyKind::jacobi && !beta) throw DomainError("jacobi requires beta");
  const double b_par = kind == FamilyKind::jacobi ? *beta : 0.0;
  check_parameters(kind, alpha, b_par);

  FamilyDescriptor f;
  f.kind = kind;
  f.alpha = alpha;
  f.beta = b_par;

  const double a = alpha;
  switch (kind) {
    case FamilyKind::laguerre_I:
    case FamilyKind::laguerre_II:
    case FamilyKind::laguerre_III: {
      f.p = Polynomial({0.0, -1.0});
      f.q = Polynomial({-a - 1.0, 1.0});
      f.s = Polynomial({-a - 0.5, 1.0});
      f.interval = {0.0, kInf};
      SeedData& sd = f.seed;
      if (kind == FamilyKind::laguerre_I) {
        f.eta = Polynomial({a, 1.0});
        f.xi = -a;
        f.c10 = 1.0;
        f.c11 = 1.0;
        sd.alpha0 = a - 1.0;
        sd.eta = laguerre_poly(1, sd.alpha0).reflected();
        sd.b = sd.eta;
      } else if (kind == FamilyKind::laguerre_II) {
        f.eta = Polynomial({-a, -1.0});
        f.xi = -a;
        f.c10 = 1.0;
        f.c11 = 1.0;
        sd.alpha0 = a + 1.0;
        sd.eta = laguerre_poly(1, -sd.alpha0);
        sd.b = Polynomial::monomial(1) * sd.eta;
      } else {
        f.eta = Polynomial({-a, 1.0});
        f.xi = a;
        f.c10 = 1.0;
        f.c11 = 0.0;
        sd.alpha0 = a + 1.0;
        sd.eta = laguerre_poly(1, -sd.alpha0).reflected();
        sd.b = Polynomial::monomial(1) * sd.eta;
      }
      sd.q = Polynomial({-sd.alpha0 - 1.0, 1.0});
      f.b = sd.b;
      break;
    }
    case FamilyKind::jacobi: {
      const double b = b_par;
      f.p = Polynomial({1.0, 0.0, -1.0});
      f.q = Polynomial({b - a, -(a + b + 2.0)});
      f.eta = Polynomial({-(a + b) / 2.0, (b - a) / 2.0});
      f.s = Polynomial({b - a, -(a + b + 1.0)});
      f.xi = (a + b) / (b - a);
      f.interval = {-1.0, 1.0};
      f.c11 = 0.5;
      SeedData& sd = f.seed;
      sd.alpha0 = a + 1.0;
      sd.beta0 = b - 1.0;
      sd.q = Polynomial({sd.beta0 - sd.alpha0, -(sd.alpha0 + sd.beta0 + 2.0)});
      sd.eta = jacobi_poly(1, -sd.alpha0, sd.beta0);
      sd.b = Polynomial({1.0, -1.0}) * sd.eta;
      f.b = sd.b;
      break;
    }
  }
  if (kind == FamilyKind::jacobi) {
    // First flag element c10 + c11 (x - xi) must satisfy the exceptional condition.
    f.c10 = f.e1() * f.c11 / f.e0();
  }
  f.recursion = recursion_from(f.p, f.s, f.xi);
  return f;
}

FactorizationResult s_via_factorization(const Polynomial& p, const Polynomial& q, const Polynomial& eta,
                                        const Polynomial& b, double rel_tol) {
  const Polynomial dp = p.derivative();
  RationalFunction r;
  r.numerator = (q + dp * 0.5) * eta * b + 2.0 * p * (eta.derivative() * b - b.derivative() * eta);
  r.denominator = eta * b;
  FactorizationResult out;
  out.remainder_ratio = division_remainder_ratio(r);
  out.s = reduce_to_polynomial(r, rel_tol);
  return out;
}

FactorizationResult s_via_factorization(const FamilyDescriptor& family, double rel_tol) {
  return s_via_factorization(family.p, family.seed.q, family.seed.eta, family.seed.b, rel_tol);
}

double norm_Kn(const FamilyDescriptor& family, int n) {
  family.require_admissible(n);
  const double a = family.alpha;
  const double nn = n;
  switch (family.kind) {
    case FamilyKind::laguerre_I:
      return (a + nn) * std::exp(std::lgamma(a + nn - 1.0) - std::lgamma(nn));
    case FamilyKind::laguerre_II:
      return (a + nn - 1.0) * std::exp(std::lgamma(a + nn + 1.0) - std::lgamma(nn));
    case FamilyKind::laguerre_III:
      if (n == 0) return gamma(a + 1.0) * gamma(-a) / gamma(1.0 - a);
      return nn * std::exp(std::lgamma(nn + a) - std::lgamma(nn - 1.0));
    case FamilyKind::jacobi: {
      const double b = family.beta;
      const double log_g = std::lgamma(a + nn) + std::lgamma(b + nn) - std::lgamma(nn) - std::lgamma(a + b + nn);
      return std::pow(2.0, a + b + 1.0) * (a + nn) * (b + nn) * std::exp(log_g) /
             (4.0 * (a + nn - 1.0) * (b + nn - 1.0) * (a + b + 2.0 * nn - 1.0));
    }
  }
  return 0.0;
}

RationalFunction NaturalOperator::apply(const Polynomial& y) const {
  const Polynomial dy = y.derivative();
  RationalFunction out;
  out.numerator = order2 * y.derivative(2) * order1.denominator + order1.numerator * dy + order0.numerator * y;
  out.denominator = order1.denominator;
  return out;
}

NaturalOperator natural_operator_coeffs(const Polynomial& p, const Polynomial& eta, const Polynomial& s) {
  const Polynomial half_dp = p.derivative() * 0.5;
  const Polynomial deta = eta.derivative();
  NaturalOperator op;
  op.order2 = p;
  op.order1 = {(half_dp + s) * eta - 2.0 * p * deta, eta};
  op.order0 = {p * deta.derivative() + (half_dp - s) * deta, eta};
  return op;
}

NaturalOperator natural_operator_coeffs(const FamilyDescriptor& family) {
  return natural_operator_coeffs(family.p, family.eta, family.s);
}

double X2Data::weight(double x) const {
  if (!(x > 0)) return 0.0;
  const double d = eta(x);
  return std::exp(alpha * std::log(x) - x) / (d * d);
}

X2Data x2_type1_data(double alpha, X2Convention convention) {
  if (!(alpha > 0)) throw DomainError("X2 Type I data requires alpha > 0");
  X2Data d;
  d.alpha = alpha;
  d.p = Polynomial({0.0, -1.0});
  if (convention == X2Convention::shifted) {
    d.eta = laguerre_poly(2, alpha - 1.0).reflected();
    d.s = Polynomial({-alpha - 0.5, 1.0});
  } else {
    d.eta = laguerre_poly(2, alpha).reflected();
    d.s = Polynomial({-alpha - 1.5, 1.0});
  }
  return d;
}

}  // namespace xop
