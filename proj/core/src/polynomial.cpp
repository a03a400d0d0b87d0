#include "xop/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xop/errors.hpp"

namespace xop {

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(double c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int power, double coefficient) {
  if (power < 0) throw DomainError("monomial power must be non-negative");
  std::vector<double> c(static_cast<std::size_t>(power) + 1, 0.0);
  c.back() = coefficient;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear_factor(double root) { return Polynomial({-root, 1.0}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(i)];
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative(int order) const {
  std::vector<double> c = coeffs_;
  for (int k = 0; k < order && !c.empty(); ++k) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = static_cast<double>(i) * c[i];
    c.pop_back();
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::reflected() const {
  std::vector<double> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

double Polynomial::max_norm() const {
  double m = 0.0;
  for (double v : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& v : coeffs_) v *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<double> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(c));
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  const int dn = dividend.degree();
  const int dd = divisor.degree();
  if (dn < dd) return {Polynomial{}, dividend};

  std::vector<double> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  std::vector<double> quot(static_cast<std::size_t>(dn - dd) + 1, 0.0);
  const double lead = divisor.leading();
  for (int k = dn - dd; k >= 0; --k) {
    const double q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(j);
    rem[static_cast<std::size_t>(k + dd)] = 0.0;
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

double division_remainder_ratio(const RationalFunction& r) {
  const DivisionResult d = divide(r.numerator, r.denominator);
  const double scale = r.numerator.max_norm();
  return scale == 0.0 ? 0.0 : d.remainder.max_norm() / scale;
}

Polynomial reduce_to_polynomial(const RationalFunction& r, double rel_tol) {
  DivisionResult d = divide(r.numerator, r.denominator);
  const double scale = r.numerator.max_norm();
  const double ratio = scale == 0.0 ? 0.0 : d.remainder.max_norm() / scale;
  if (ratio > rel_tol) {
    std::ostringstream msg;
    msg << "rational function is not a polynomial (relative remainder " << ratio << ")";
    throw NonPolynomialError(msg.str(), ratio);
  }
  return std::move(d.quotient);
}

int ShiftedPolynomial::degree() const {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d >= 0 && coeffs[static_cast<std::size_t>(d)] == 0.0) --d;
  return d;
}

double ShiftedPolynomial::operator()(double x) const {
  const double t = x - center;
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial to_monomial(const ShiftedPolynomial& sp) {
  // Horner in the variable (x - center).
  const Polynomial shift = Polynomial::linear_factor(sp.center);
  Polynomial acc;
  for (auto it = sp.coeffs.rbegin(); it != sp.coeffs.rend(); ++it) acc = acc * shift + Polynomial::constant(*it);
  return acc;
}

ShiftedPolynomial to_shifted(const Polynomial& p, double center) {
  // Repeated synthetic division by (x - center) yields the Taylor coefficients.
  std::vector<double> work(p.coefficients().begin(), p.coefficients().end());
  ShiftedPolynomial out{center, {}};
  out.coeffs.reserve(work.size());
  for (std::size_t n = work.size(); n > 0; --n) {
    for (std::size_t i = n - 1; i > 0; --i) work[i - 1] += center * work[i];
    out.coeffs.push_back(work[0]);
    work.erase(work.begin());
  }
  return out;
}

double proportionality_defect(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = std::max(a.size(), b.size());
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = i < a.size() ? a[i] : 0.0;
    const double v = i < b.size() ? b[i] : 0.0;
    dot += u * v;
    na += u * u;
    nb += v * v;
  }
  if (na == 0.0 || nb == 0.0) return (na == nb) ? 0.0 : 1.0;
  return 1.0 - std::abs(dot) / std::sqrt(na * nb);
}

}  // namespace xop
