#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "xop/family.hpp"
#include "xop/quadrature.hpp"
#include "xop/wide_real.hpp"

namespace xop {

enum class MomentSource { initial_closed_form, recursion, quadrature };

std::string_view source_name(MomentSource s);

/// Adjusted moments mu_k = int_I (x - xi)^k W(x) dx, k = 0..N.
struct MomentTable {
  FamilyKind kind{};
  double alpha = 0;
  double beta = 0;
  std::vector<double> values;
  /// Unrounded values carried by the recursion; equal to values for quadrature entries.
  std::vector<wide_real> wide;
  std::vector<MomentSource> sources;
  /// Quadrature error estimate, NaN for other sources.
  std::vector<double> error_estimates;

  std::size_t size() const { return values.size(); }
  /// Highest stored index N.
  int max_index() const { return static_cast<int>(values.size()) - 1; }
  double operator[](std::size_t k) const { return values[k]; }
};

struct InitialMoments {
  double mu0 = 0;
  double mu1 = 0;
  MomentSource mu0_source = MomentSource::initial_closed_form;
  /// Jacobi only: closed-form mu2 and the literal tabulated mu0 with its
  /// relative deviation from the value used.
  std::optional<double> mu2;
  std::optional<double> tabulated_mu0;
  std::optional<double> tabulated_mu0_deviation;
};

/// Types I/II: mu1 = e^a a^a Gamma(1+a) Gamma(-a, a), mu0 = Gamma(a) - 2 mu1.
/// Type III: mu0 = -Gamma(a+1)/a, mu1 = e^(-a) (-a)^a Gamma(1+a) Gamma(-a, -a).
/// Jacobi: mu1 = 4 (J1 + J2) / (b - a) through Appell F1, mu2 in closed form,
/// and mu0 from the k = 1 recursion step.
InitialMoments initial_moments(const FamilyDescriptor& family, const QuadratureSpec& spec = {});

/// Jacobi mu2 = 4 * 2^(a+b+1) Gamma(a+1) Gamma(b+1) / ((b-a)^2 Gamma(a+b+2)).
double jacobi_mu2(double alpha, double beta);
/// The same expression without the 2^(a+b+1) factor.
double jacobi_mu2_unscaled(double alpha, double beta);
/// J1 and J2 of the Jacobi mu1 decomposition, via Appell F1.
double jacobi_J1(double alpha, double beta, const QuadratureSpec& spec = {});
double jacobi_J2(double alpha, double beta, const QuadratureSpec& spec = {});
/// Tabulated closed form for the Jacobi mu0, kept for comparison only.
double jacobi_tabulated_mu0(double alpha, double beta, const QuadratureSpec& spec = {});

/// One forward step: mu_{k+1} from mu_{k-1}, mu_k. Throws RecursionBreakdown
/// when k r2 + s1 vanishes.
wide_real recursion_step(const RecursionCoefficients& r, int k, wide_real mu_km1, wide_real mu_k);

/// mu_0..mu_N from the initial values and the forward recursion, carried in
/// wide_real. Requires N >= 2.
MomentTable generate_moments(const FamilyDescriptor& family, int N, const QuadratureSpec& spec = {});

struct QuadMoment {
  double value = 0;
  double error_estimate = 0;
};

/// Direct quadrature of the defining integral.
QuadMoment moment_by_quadrature(const FamilyDescriptor& family, int k, const QuadratureSpec& spec = {});

/// mu_0..mu_N, every entry by quadrature.
MomentTable quadrature_moments(const FamilyDescriptor& family, int N, const QuadratureSpec& spec = {});

/// int_I (x - xi1)^l1 (x - xi2)^l2 W(x) dx. The weight must be integrable;
/// W may be singular only at finite interval ends.
double x2_moment_quadrature(const std::function<double(double)>& weight, double xi1, double xi2, int l1, int l2,
                            const Interval& domain, const QuadratureSpec& spec = {});

enum class RecursionVariant {
  pearson,            ///< (k r2 + s1) mu_{k+1} = ... with derived coefficients
  family_rows,     ///< family rows of the recursion table, mu_{k+2} from mu_k, mu_{k+1}
  constant_prefactor,  ///< (r2 + s1) in place of (k r2 + s1)
};

std::string_view variant_name(RecursionVariant v);

/// mu_0..mu_N from the same mu0, mu1 with the chosen recursion; double
/// precision, no breakdown check beyond division by zero producing inf/nan.
std::vector<double> variant_moments(const FamilyDescriptor& family, RecursionVariant variant, int N,
                                    const QuadratureSpec& spec = {});

struct VariantAgreement {
  RecursionVariant variant{};
  double max_relative_error = 0;  ///< max_k |mu_k - oracle_k| / (1 + |oracle_k|)
  bool agrees = false;
};

/// Compares every variant against the quadrature oracle over 0..N.
std::vector<VariantAgreement> compare_recursion_variants(const FamilyDescriptor& family, int N, double tolerance,
                                                         const QuadratureSpec& spec = {});
/// Same comparison against a precomputed oracle table (N = oracle.max_index()).
std::vector<VariantAgreement> compare_recursion_variants(const FamilyDescriptor& family, const MomentTable& oracle,
                                                         double tolerance, const QuadratureSpec& spec = {});

}  // namespace xop
