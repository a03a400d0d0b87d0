#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xop/detrep.hpp"
#include "xop/family.hpp"
#include "xop/polynomial.hpp"
#include "xop/quadrature.hpp"

namespace xop {

/// e1 y'(root) - e0 y(root) together with the magnitude bound
/// |e1| sum |y'_i| |root|^i + |e0| sum |y_i| |root|^i that rounding is measured against.
struct ConditionValue {
  double value = 0;
  double scale = 0;

  /// |value| / scale, or 0 / inf when scale is zero.
  double relative() const;
};

ConditionValue exceptional_condition(const Polynomial& p, const Polynomial& eta, const Polynomial& s, double root,
                                     const Polynomial& y);
ConditionValue exceptional_condition(const FamilyDescriptor& family, const Polynomial& y);
double exceptional_condition_value(const FamilyDescriptor& family, const Polynomial& y);

enum class CheckStatus { pass, fail, informational };
std::string_view status_name(CheckStatus s);

struct Check {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::informational;
  double residual = 0;
  double tolerance = 0;
  std::string note;
};

/// pass when residual <= tolerance (NaN fails).
Check make_check(std::string name, std::string anchor, double residual, double tolerance, std::string note = {});
/// pass when residual >= threshold.
Check make_lower_bound_check(std::string name, std::string anchor, double residual, double threshold,
                             std::string note = {});
Check make_info(std::string name, std::string anchor, double residual, std::string note = {});

struct VerificationReport {
  std::string family;
  double alpha = 0;
  double beta = 0;
  bool has_beta = false;
  std::vector<Check> checks;

  void append(std::vector<Check> more);
  /// Stable sort by check name.
  void sort();
  /// Every non-informational check passed.
  bool passed() const;
  const Check* find(std::string_view name) const;
};

/// Flag elements (y1 or the Type III constant, then v_k = (x - xi)^k for
/// 2 <= k <= max_n) satisfy the condition; the excluded degree does not.
std::vector<Check> flag_check(const FamilyDescriptor& family, int max_n);

struct X2Candidate {
  std::string name;
  Polynomial y;
  bool expect_in_flag = true;
};

struct X2Roots {
  double xi1 = 0;  ///< smaller root
  double xi2 = 0;
};

/// Real roots of a quadratic; throws DomainError on a negative discriminant.
X2Roots quadratic_roots(const Polynomial& eta);

/// v2 = L_2^alpha(-x), v3 = (x - xi1)^2 (x - xi2 + 1), v4 = (x - xi1)^2 (x - xi2)^2 and y = x.
std::vector<X2Candidate> x2_standard_candidates(double alpha, const Polynomial& eta);

/// Evaluates both exceptional conditions for every candidate. A candidate
/// vanishes when both relative values are <= tol; its check passes when that
/// matches expect_in_flag.
std::vector<Check> x2_flag_check(const Polynomial& eta, const Polynomial& s, const Polynomial& p,
                                 const std::vector<X2Candidate>& candidates, double tol = 1e-10);

struct EigenResidual {
  double lambda = 0;
  double residual = 0;  ///< ||T[y] - lambda y||_max / ||y||_max
};

/// Applies the natural operator; throws NonPolynomialError when the image is
/// not a polynomial (remainder above rel_tol).
EigenResidual natural_operator_residual(const Polynomial& p, const Polynomial& eta, const Polynomial& s,
                                        const Polynomial& y, double rel_tol = 1e-9);
EigenResidual natural_operator_residual(const FamilyDescriptor& family, const Polynomial& y, double rel_tol = 1e-9);

struct GramMatrix {
  std::vector<int> degrees;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> error_estimates;
  std::vector<double> Kn;
  std::vector<std::string> failures;  ///< entries whose quadrature did not converge

  /// max over n != k of |G_nk| / sqrt(G_nn G_kk).
  double max_relative_offdiag() const;
};

/// <y_n, y_k> by quadrature for admissible n, k <= max_n, with the y_n from
/// the determinantal solve.
GramMatrix orthogonality_matrix(const FamilyDescriptor& family, int max_n, const QuadratureSpec& spec = {});

/// Integral of f g W over the family interval; f and g in the (x - xi) basis.
QuadResult weighted_inner_product(const FamilyDescriptor& family, const ShiftedPolynomial& f,
                                  const ShiftedPolynomial& g, const QuadratureSpec& spec = {});

/// -(x L_1^(-a-1)(-x) y' - 2 L_2^(-a-2)(-x) y) with y = L_{n-2}^(a+1); the
/// constant 1 for n = 0. Throws InadmissibleDegree for n = 1 or n < 0.
Polynomial darboux_typeIII(double alpha, int n);

struct DarbouxDiagnostic {
  Polynomial y;
  double defect = 0;  ///< 1 - |cos| against the determinantal output
  bool proportional = false;
};

/// P_1^(-a-1, b-1)(x) ((1 - x) y' - a y) / (a + 1 + j), y = P_j^(a+1, b-1), j = n - 1,
/// compared against the determinantal Jacobi polynomial of degree n.
DarbouxDiagnostic darboux_jacobi_diagnostic(double alpha, double beta, int n);

struct ReportOptions {
  int max_degree = 6;
  int moment_checks = 12;  ///< oracle comparison for 0 <= k <= moment_checks
  QuadratureSpec quadrature{};
};

/// Runs every check that applies to the family.
VerificationReport verify_family(const FamilyDescriptor& family, const ReportOptions& options = {});

/// X2 Type I candidate checks for the given alpha.
VerificationReport verify_x2(double alpha, X2Convention convention = X2Convention::shifted, double tol = 1e-9);

}  // namespace xop
