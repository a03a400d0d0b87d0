#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace xop {

/// Dense real polynomial over the monomial basis x^i. Exact trailing zeros
/// are trimmed, so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  static Polynomial constant(double c);
  static Polynomial monomial(int power, double coefficient = 1.0);
  /// x - root
  static Polynomial linear_factor(double root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const double> coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  double coeff(int i) const;
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double x) const;

  Polynomial derivative(int order = 1) const;
  /// p(-x)
  Polynomial reflected() const;
  /// Largest absolute coefficient.
  double max_norm() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
  friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= -1.0; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division; deg(remainder) < deg(divisor). Throws DomainError for a
/// zero divisor.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

/// numerator / denominator as a rational function.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  double operator()(double x) const { return numerator(x) / denominator(x); }
};

/// Reduces a rational function that is expected to be polynomial. The
/// remainder's max-norm must not exceed rel_tol times the dividend's,
/// otherwise NonPolynomialError carries the observed ratio.
Polynomial reduce_to_polynomial(const RationalFunction& r, double rel_tol = 1e-10);

/// Relative size of the division remainder, ||rem|| / ||num||.
double division_remainder_ratio(const RationalFunction& r);

/// Polynomial in the shifted basis (x - center)^i.
struct ShiftedPolynomial {
  double center = 0.0;
  std::vector<double> coeffs;

  int degree() const;
  double operator()(double x) const;
};

Polynomial to_monomial(const ShiftedPolynomial& sp);
ShiftedPolynomial to_shifted(const Polynomial& p, double center);

/// 1 - |cos angle| between two coefficient vectors (shorter one zero-padded).
/// Zero means the polynomials are proportional.
double proportionality_defect(std::span<const double> a, std::span<const double> b);

}  // namespace xop
