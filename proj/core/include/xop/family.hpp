#pragma once

#include <optional>
#include <string_view>

#include "xop/polynomial.hpp"
#include "xop/quadrature.hpp"

namespace xop {

enum class FamilyKind { laguerre_I, laguerre_II, laguerre_III, jacobi };

/// CLI spelling: lag1, lag2, lag3, jacobi.
std::string_view family_name(FamilyKind kind);
/// Inverse of family_name(); throws DomainError for unknown names.
FamilyKind parse_family(std::string_view name);

bool is_laguerre(FamilyKind kind);

/// Coefficients of the moment recursion
///   (k r2 + s1) mu_{k+1} = -(k r0 + s_{-1}) mu_{k-1} - (k r1 + s0) mu_k.
/// r_l are the Taylor coefficients of p at xi; s_m come from the first-order
/// Pearson coefficient p' + p W'/W expanded at xi.
struct RecursionCoefficients {
  double r0 = 0, r1 = 0, r2 = 0;
  double s_m1 = 0, s0 = 0, s1 = 0;
};

/// Seed data before the parameter shift: classical q at the seed parameters,
/// the seed denominator and the factorization gauge b.
struct SeedData {
  double alpha0 = 0;
  double beta0 = 0;
  Polynomial q;
  Polynomial eta;
  Polynomial b;
};

struct FamilyDescriptor {
  FamilyKind kind{};
  double alpha = 0;
  double beta = 0;  ///< Jacobi only

  Polynomial p;
  Polynomial q;
  Polynomial eta;
  Polynomial s;
  Polynomial b;
  double xi = 0;
  Interval interval;

  double c10 = 0;
  double c11 = 0;
  RecursionCoefficients recursion;
  SeedData seed;

  /// Weight W-hat(x) on the open interval.
  double weight(double x) const;
  /// Same weight, using the node's endpoint distances for the singular factors.
  double weight(const QuadNode& node) const;
  /// Algebraic exponents at the lower and upper ends (for quadrature hints).
  double lower_exponent() const;
  double upper_exponent() const;

  /// Degrees present in the sequence: Type III skips 1, the others skip 0.
  bool admissible(int n) const;
  /// The single missing degree.
  int excluded_degree() const;
  /// Throws InadmissibleDegree when admissible(n) is false.
  void require_admissible(int n) const;

  /// Exceptional condition e1 y'(xi) - e0 y(xi) = 0 with
  ///   e0 = p eta'' + p' eta' / 2 - s eta',  e1 = 2 p eta'   (all at xi).
  double e0() const;
  double e1() const;
};

/// Builds the descriptor; beta is required for Jacobi and ignored otherwise.
/// Throws DomainError naming the violated constraint.
FamilyDescriptor make_family(FamilyKind kind, double alpha, std::optional<double> beta = std::nullopt);

struct FactorizationResult {
  Polynomial s;
  double remainder_ratio = 0;  ///< ||remainder|| / ||numerator||
};

/// s = q + p'/2 + 2p (eta'/eta - b'/b) from the seed data. The seed parameters
/// already carry the shift, so the result is directly comparable to the
/// descriptor's s. Throws NonPolynomialError above rel_tol.
FactorizationResult s_via_factorization(const FamilyDescriptor& family, double rel_tol = 1e-10);

/// Same computation from explicit data.
FactorizationResult s_via_factorization(const Polynomial& p, const Polynomial& q, const Polynomial& eta,
                                        const Polynomial& b, double rel_tol = 1e-10);

/// Squared norm K_n (codimension one). Throws InadmissibleDegree.
double norm_Kn(const FamilyDescriptor& family, int n);

/// Natural operator
///   T[y] = p y'' + (p'/2 + s - 2p eta'/eta) y' + (p eta''/eta + (p'/2 - s) eta'/eta) y
/// with the rational coefficients stored over the common denominator eta.
struct NaturalOperator {
  Polynomial order2;               ///< p
  RationalFunction order1;         ///< ((p'/2 + s) eta - 2 p eta') / eta
  RationalFunction order0;         ///< (p eta'' + (p'/2 - s) eta') / eta

  /// T[y] as numerator / eta.
  RationalFunction apply(const Polynomial& y) const;
};

NaturalOperator natural_operator_coeffs(const FamilyDescriptor& family);
NaturalOperator natural_operator_coeffs(const Polynomial& p, const Polynomial& eta, const Polynomial& s);

/// X2 Type I data. The shifted convention uses eta = L_2^(alpha-1)(-x) and
/// s = x - alpha - 1/2; the seed convention uses eta = L_2^alpha(-x) and
/// s = x - alpha - 3/2.
enum class X2Convention { shifted, seed };

struct X2Data {
  double alpha = 0;
  Polynomial p;
  Polynomial eta;
  Polynomial s;

  double weight(double x) const;
};

X2Data x2_type1_data(double alpha, X2Convention convention = X2Convention::shifted);

}  // namespace xop
