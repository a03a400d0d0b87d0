#include "xop/classical.hpp"

#include "xop/errors.hpp"

namespace xop {

namespace {

void require_degree(int n) {
  if (n < 0) throw DomainError("polynomial degree must be non-negative");
}

// Jacobi recurrence in the form
//   a1 P_{k+1} = (a2 + a3 x) P_k - a4 P_{k-1},  k >= 1,
// with P_1 = (alpha - beta)/2 + (alpha + beta + 2) x / 2 handled separately so
// that alpha + beta = -1 or -2 does not divide by zero.
struct JacobiStep {
  double a1, a2, a3, a4;
};

JacobiStep jacobi_step(int k, double a, double b) {
  const double kk = k;
  const double s = 2.0 * kk + a + b;
  return {2.0 * (kk + 1.0) * (kk + a + b + 1.0) * s, (s + 1.0) * (a * a - b * b),
          s * (s + 1.0) * (s + 2.0), 2.0 * (kk + a) * (kk + b) * (s + 2.0)};
}

}  // namespace

double laguerre_eval(int n, double alpha, double x) {
  require_degree(n);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_eval(int n, double alpha, double beta, double x) {
  require_degree(n);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x;
  for (int k = 1; k < n; ++k) {
    const JacobiStep c = jacobi_step(k, alpha, beta);
    const double next = ((c.a2 + c.a3 * x) * cur - c.a4 * prev) / c.a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

Polynomial laguerre_poly(int n, double alpha) {
  require_degree(n);
  Polynomial prev = Polynomial::constant(1.0);
  if (n == 0) return prev;
  Polynomial cur({1.0 + alpha, -1.0});
  for (int k = 1; k < n; ++k) {
    Polynomial next = (Polynomial({2.0 * k + 1.0 + alpha, -1.0}) * cur - (k + alpha) * prev) * (1.0 / (k + 1.0));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial jacobi_poly(int n, double alpha, double beta) {
  require_degree(n);
  Polynomial prev = Polynomial::constant(1.0);
  if (n == 0) return prev;
  Polynomial cur({0.5 * (alpha - beta), 0.5 * (alpha + beta + 2.0)});
  for (int k = 1; k < n; ++k) {
    const JacobiStep c = jacobi_step(k, alpha, beta);
    Polynomial next = (Polynomial({c.a2, c.a3}) * cur - c.a4 * prev) * (1.0 / c.a1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace xop
