#pragma once

#include "xop/quadrature.hpp"

namespace xop {

/// Gamma function. Throws DomainError at 0, -1, -2, ...
double gamma(double x);

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt for
/// x > 0 and any real a. Negative a (needed for Gamma(-alpha, alpha)) is
/// evaluated by quadrature of the defining integral.
double upper_incomplete_gamma(double a, double x, const QuadratureSpec& spec = {});

/// Generalized exponential integral E_a(x) = int_1^inf e^(-x t) t^(-a) dt, x > 0.
double exp_integral_e(double a, double x, const QuadratureSpec& spec = {});

/// Appell F1 through its Euler-type integral
///   Gamma(c) / (Gamma(a) Gamma(c-a)) int_0^1 t^(a-1) (1-t)^(c-a-1)
///       (1 - x t)^(-b1) (1 - y t)^(-b2) dt,
/// valid for c > a > 0 and x, y < 1.
double appell_f1(double a, double b1, double b2, double c, double x, double y,
                 const QuadratureSpec& spec = {});

}  // namespace xop
