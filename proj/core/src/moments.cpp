#include "xop/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "xop/errors.hpp"
#include "xop/specfun.hpp"

namespace xop {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double int_power(double base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

std::string_view source_name(MomentSource s) {
  switch (s) {
    case MomentSource::initial_closed_form: return "initial";
    case MomentSource::recursion: return "recursion";
    case MomentSource::quadrature: return "quadrature";
  }
  return "unknown";
}

std::string_view variant_name(RecursionVariant v) {
  switch (v) {
    case RecursionVariant::pearson: return "pearson";
    case RecursionVariant::family_rows: return "family-rows";
    case RecursionVariant::constant_prefactor: return "constant-prefactor";
  }
  return "unknown";
}

double jacobi_mu2_unscaled(double alpha, double beta) {
  const double d = beta - alpha;
  return 4.0 * std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0)) / (d * d);
}

double jacobi_mu2(double alpha, double beta) {
  return std::pow(2.0, alpha + beta + 1.0) * jacobi_mu2_unscaled(alpha, beta);
}

double jacobi_J1(double alpha, double beta, const QuadratureSpec& spec) {
  const double s = alpha + beta;
  return -appell_f1(1.0, -beta, 1.0, alpha + 2.0, -1.0, (beta - alpha) / s, spec) / ((alpha + 1.0) * s);
}

double jacobi_J2(double alpha, double beta, const QuadratureSpec& spec) {
  const double s = alpha + beta;
  return -appell_f1(1.0, -alpha, 1.0, beta + 2.0, -1.0, (alpha - beta) / s, spec) / ((beta + 1.0) * s);
}

double jacobi_tabulated_mu0(double alpha, double beta, const QuadratureSpec& spec) {
  const double J = jacobi_J1(alpha, beta, spec) + jacobi_J2(alpha, beta, spec);
  const double ab = alpha * beta;
  const double g = std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
  return (alpha + beta) * g / (2.0 * ab) + (2.0 * ab - alpha - beta) * J / ab;
}

InitialMoments initial_moments(const FamilyDescriptor& family, const QuadratureSpec& spec) {
  const double a = family.alpha;
  InitialMoments im;
  switch (family.kind) {
    case FamilyKind::laguerre_I:
    case FamilyKind::laguerre_II:
      im.mu1 = std::exp(a + a * std::log(a)) * gamma(1.0 + a) * upper_incomplete_gamma(-a, a, spec);
      im.mu0 = gamma(a) - 2.0 * im.mu1;
      break;
    case FamilyKind::laguerre_III:
      im.mu0 = -gamma(a + 1.0) / a;
      im.mu1 = std::exp(-a + a * std::log(-a)) * gamma(1.0 + a) * upper_incomplete_gamma(-a, -a, spec);
      break;
    case FamilyKind::jacobi: {
      const double b = family.beta;
      im.mu1 = 4.0 * (jacobi_J1(a, b, spec) + jacobi_J2(a, b, spec)) / (b - a);
      im.mu2 = jacobi_mu2(a, b);
      // k = 1 step solved for mu0: (r2 + s1) mu2 = -(r0 + s_{-1}) mu0 - (r1 + s0) mu1.
      const RecursionCoefficients& r = family.recursion;
      const wide_real num = wide_real(r.r2 + r.s1) * wide_real(*im.mu2) + wide_real(r.r1 + r.s0) * wide_real(im.mu1);
      im.mu0 = static_cast<double>(num / -wide_real(r.r0 + r.s_m1));
      im.mu0_source = MomentSource::recursion;
      im.tabulated_mu0 = jacobi_tabulated_mu0(a, b, spec);
      im.tabulated_mu0_deviation = std::abs(*im.tabulated_mu0 - im.mu0) / std::abs(im.mu0);
      break;
    }
  }
  return im;
}

wide_real recursion_step(const RecursionCoefficients& r, int k, wide_real mu_km1, wide_real mu_k) {
  const wide_real lead = wide_real(k) * wide_real(r.r2) + wide_real(r.s1);
  if (lead == 0) {
    std::ostringstream msg;
    msg << "moment recursion breaks down at k = " << k << " (k r2 + s1 = 0)";
    throw RecursionBreakdown(msg.str());
  }
  const wide_real c_prev = wide_real(k) * wide_real(r.r0) + wide_real(r.s_m1);
  const wide_real c_cur = wide_real(k) * wide_real(r.r1) + wide_real(r.s0);
  return -(c_prev * mu_km1 + c_cur * mu_k) / lead;
}

MomentTable generate_moments(const FamilyDescriptor& family, int N, const QuadratureSpec& spec) {
  if (N < 2) throw DomainError("generate_moments needs N >= 2");
  MomentTable t;
  t.kind = family.kind;
  t.alpha = family.alpha;
  t.beta = family.beta;
  const auto size = static_cast<std::size_t>(N) + 1;
  t.wide.resize(size);
  t.sources.assign(size, MomentSource::recursion);
  t.error_estimates.assign(size, kNaN);

  const InitialMoments im = initial_moments(family, spec);
  t.wide[1] = im.mu1;
  t.sources[1] = MomentSource::initial_closed_form;
  t.sources[0] = im.mu0_source;
  int first_k = 1;
  if (family.kind == FamilyKind::jacobi) {
    const RecursionCoefficients& r = family.recursion;
    t.wide[2] = *im.mu2;
    t.sources[2] = MomentSource::initial_closed_form;
    t.wide[0] = (wide_real(r.r2 + r.s1) * t.wide[2] + wide_real(r.r1 + r.s0) * t.wide[1]) / -wide_real(r.r0 + r.s_m1);
    first_k = 2;
  } else {
    t.wide[0] = im.mu0;
  }
  for (int k = first_k; k < N; ++k) {
    const auto i = static_cast<std::size_t>(k);
    t.wide[i + 1] = recursion_step(family.recursion, k, t.wide[i - 1], t.wide[i]);
  }
  t.values.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    t.values[i] = static_cast<double>(t.wide[i]);
    if (!std::isfinite(t.values[i])) {
      std::ostringstream msg;
      msg << "moment recursion overflowed at k = " << i;
      throw RecursionBreakdown(msg.str());
    }
  }
  return t;
}

QuadMoment moment_by_quadrature(const FamilyDescriptor& family, int k, const QuadratureSpec& spec) {
  if (k < 0) throw DomainError("moment index must be non-negative");
  const double xi = family.xi;
  const QuadResult r = integrate_nodes(
      [&](const QuadNode& n) {
        const double w = family.weight(n);
        return w == 0.0 ? 0.0 : int_power(n.x - xi, k) * w;
      },
      family.interval, spec);
  return {r.value, r.error_estimate};
}

MomentTable quadrature_moments(const FamilyDescriptor& family, int N, const QuadratureSpec& spec) {
  if (N < 0) throw DomainError("moment count must be non-negative");
  MomentTable t;
  t.kind = family.kind;
  t.alpha = family.alpha;
  t.beta = family.beta;
  for (int k = 0; k <= N; ++k) {
    const QuadMoment m = moment_by_quadrature(family, k, spec);
    t.values.push_back(m.value);
    t.wide.push_back(m.value);
    t.sources.push_back(MomentSource::quadrature);
    t.error_estimates.push_back(m.error_estimate);
  }
  return t;
}

double x2_moment_quadrature(const std::function<double(double)>& weight, double xi1, double xi2, int l1, int l2,
                            const Interval& domain, const QuadratureSpec& spec) {
  if (l1 < 0 || l2 < 0) throw DomainError("multi-index moment indices must be non-negative");
  return integrate(
             [&](double x) {
               const double w = weight(x);
               return w == 0.0 ? 0.0 : int_power(x - xi1, l1) * int_power(x - xi2, l2) * w;
             },
             domain,
                   spec)
      .value;
}

std::vector<double> variant_moments(const FamilyDescriptor& family, RecursionVariant variant, int N,
                                    const QuadratureSpec& spec) {
  if (N < 2) throw DomainError("variant_moments needs N >= 2");
  if (variant == RecursionVariant::pearson) return generate_moments(family, N, spec).values;

  const InitialMoments im = initial_moments(family, spec);
  std::vector<double> mu(static_cast<std::size_t>(N) + 1, 0.0);
  mu[0] = im.mu0;
  mu[1] = im.mu1;
  const double a = family.alpha;
  const double b = family.beta;
  const double xi = family.xi;
  const RecursionCoefficients& r = family.recursion;

  if (variant == RecursionVariant::constant_prefactor) {
    for (int k = 1; k < N; ++k) {
      const auto i = static_cast<std::size_t>(k);
      mu[i + 1] = -((k * r.r0 + r.s_m1) * mu[i - 1] + (k * r.r1 + r.s0) * mu[i]) / (r.r2 + r.s1);
    }
    return mu;
  }

  for (int k = 0; k + 2 <= N; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const double kk = k;
    switch (family.kind) {
      case FamilyKind::laguerre_I:
      case FamilyKind::laguerre_II:
        mu[i + 2] = (2.0 * a + kk) * mu[i + 1] + a * (1.0 - kk) * mu[i];
        break;
      case FamilyKind::laguerre_III:
        mu[i + 2] = kk * mu[i + 1] - a * (1.0 - kk) * mu[i];
        break;
      case FamilyKind::jacobi: {
        const double den = a + b + kk;
        mu[i + 2] = ((2.0 - a - b - 2.0 * kk) * xi + b - a) / den * mu[i + 1] + (kk - 2.0) * (1.0 - xi * xi) / den * mu[i];
        break;
      }
    }
  }
  return mu;
}

std::vector<VariantAgreement> compare_recursion_variants(const FamilyDescriptor& family, int N, double tolerance,
                                                         const QuadratureSpec& spec) {
  return compare_recursion_variants(family, quadrature_moments(family, N, spec), tolerance, spec);
}

std::vector<VariantAgreement> compare_recursion_variants(const FamilyDescriptor& family, const MomentTable& oracle,
                                                         double tolerance, const QuadratureSpec& spec) {
  const int N = oracle.max_index();
  std::vector<VariantAgreement> out;
  for (RecursionVariant v :
       {RecursionVariant::pearson, RecursionVariant::family_rows, RecursionVariant::constant_prefactor}) {
    VariantAgreement va;
    va.variant = v;
    std::vector<double> mu;
    try {
      mu = variant_moments(family, v, N, spec);
    } catch (const RecursionBreakdown&) {
      va.max_relative_error = std::numeric_limits<double>::infinity();
      out.push_back(va);
      continue;
    }
    for (int k = 0; k <= N; ++k) {
      const auto i = static_cast<std::size_t>(k);
      const double err = std::abs(mu[i] - oracle.values[i]) / (1.0 + std::abs(oracle.values[i]));
      va.max_relative_error = std::isfinite(err) ? std::max(va.max_relative_error, err)
                                                 : std::numeric_limits<double>::infinity();
    }
    va.agrees = va.max_relative_error <= tolerance;
    out.push_back(va);
  }
  return out;
}

}  // namespace xop
