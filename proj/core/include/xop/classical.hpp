#pragma once

#include "xop/polynomial.hpp"

namespace xop {

/// Generalized Laguerre L_n^alpha(x) by the three-term recurrence.
double laguerre_eval(int n, double alpha, double x);

/// Jacobi P_n^(alpha,beta)(x) by the three-term recurrence.
double jacobi_eval(int n, double alpha, double beta, double x);

/// Coefficients of L_n^alpha, built with the same recurrence on polynomials.
Polynomial laguerre_poly(int n, double alpha);

/// Coefficients of P_n^(alpha,beta).
Polynomial jacobi_poly(int n, double alpha, double beta);

}  // namespace xop
