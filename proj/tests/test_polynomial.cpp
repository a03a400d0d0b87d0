#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/polynomial.hpp"

using namespace xop;

TEST(Polynomial, TrailingZerosAreTrimmed) {
  const Polynomial p({1.0, 2.0, 0.0, 0.0});
  EXPECT_EQ(p.degree(), 1);
  const Polynomial z({0.0, 0.0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_TRUE(z.coefficients().empty());
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Polynomial, Derivative) {
  EXPECT_EQ(Polynomial({0.0, 1.0, 1.0}).derivative(), Polynomial({1.0, 2.0}));
  EXPECT_TRUE(Polynomial::constant(3.0).derivative().is_zero());
  EXPECT_EQ(Polynomial({1.0, 1.0, 1.0, 1.0}).derivative(2), Polynomial({2.0, 6.0}));
}

TEST(Polynomial, DivisionByLinearFactor) {
  const double a = 0.37;
  const DivisionResult d = divide(Polynomial({-a * a, 0.0, 1.0}), Polynomial::linear_factor(a));
  EXPECT_EQ(d.quotient, Polynomial({a, 1.0}));
  EXPECT_TRUE(d.remainder.is_zero());
}

TEST(Polynomial, DivisionRemainderDegree) {
  const Polynomial num({3.0, -1.0, 4.0, 1.0, -5.0});
  const Polynomial den({2.0, 7.0, 1.0});
  const DivisionResult d = divide(num, den);
  EXPECT_LT(d.remainder.degree(), den.degree());
  for (double x : {-1.3, 0.2, 2.7}) EXPECT_NEAR((d.quotient * den + d.remainder)(x), num(x), 1e-12 * (1 + std::abs(num(x))));
  const DivisionResult lower = divide(den, num);
  EXPECT_TRUE(lower.quotient.is_zero());
  EXPECT_EQ(lower.remainder, den);
}

TEST(Polynomial, DivisionByZeroThrows) { EXPECT_THROW(divide(Polynomial({1.0}), Polynomial{}), DomainError); }

TEST(Polynomial, ProductVanishesAtDoubleRoot) {
  const double xi = -1.7;
  const Polynomial sq = Polynomial::linear_factor(xi) * Polynomial::linear_factor(xi);
  EXPECT_EQ(sq(xi), 0.0);
  EXPECT_EQ(sq.degree(), 2);
}

TEST(Polynomial, ReflectedAndScalar) {
  const Polynomial p({1.0, 2.0, 3.0});
  EXPECT_EQ(p.reflected(), Polynomial({1.0, -2.0, 3.0}));
  EXPECT_EQ(2.0 * p, Polynomial({2.0, 4.0, 6.0}));
  EXPECT_DOUBLE_EQ(p.max_norm(), 3.0);
  EXPECT_THROW(Polynomial::monomial(-1), DomainError);
}

TEST(Polynomial, ReduceToPolynomial) {
  const Polynomial den({0.5, 1.0});
  const Polynomial num = den * Polynomial({1.0, -3.0, 2.0});
  EXPECT_EQ(reduce_to_polynomial({num, den}).degree(), 2);
  const Polynomial off = num + Polynomial::constant(1e-3);
  try {
    reduce_to_polynomial({off, den});
    FAIL() << "expected NonPolynomialError";
  } catch (const NonPolynomialError& e) {
    EXPECT_GT(e.relative_remainder(), 1e-10);
  }
}

TEST(ShiftedPolynomial, ToMonomialExample) {
  const Polynomial p = to_monomial({-0.5, {-0.25, 0.0, 1.0}});
  // (x + 0.5)^2 - 0.25 = x^2 + x
  EXPECT_NEAR(p.coeff(0), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(p.coeff(1), 1.0);
  EXPECT_DOUBLE_EQ(p.coeff(2), 1.0);
  const Polynomial q = to_monomial({-0.5, {-0.5, 0.0, 1.0}});
  EXPECT_DOUBLE_EQ(q.coeff(0), -0.25);
  EXPECT_DOUBLE_EQ(q.coeff(1), 1.0);
}

TEST(ShiftedPolynomial, ToShiftedExamples) {
  const ShiftedPolynomial a = to_shifted(Polynomial({0.0, 1.0}), 0.0);
  EXPECT_EQ(a.center, 0.0);
  EXPECT_EQ(a.coeffs, (std::vector<double>{0.0, 1.0}));
  const ShiftedPolynomial b = to_shifted(Polynomial::constant(1.0), 2.5);
  EXPECT_EQ(b.coeffs, (std::vector<double>{1.0}));
  EXPECT_EQ(b(7.0), 1.0);
}

TEST(ShiftedPolynomial, RoundTripAndEvaluation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> c(1 + trial % 7);
    for (double& v : c) v = u(rng);
    c.back() = 1.0 + std::abs(c.back());
    const Polynomial p(c);
    const double center = u(rng);
    const ShiftedPolynomial sp = to_shifted(p, center);
    EXPECT_DOUBLE_EQ(sp(center), sp.coeffs[0]);
    const Polynomial back = to_monomial(sp);
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(back.coeff(static_cast<int>(i)), c[i], 1e-13 * 8.0);
    for (int k = 0; k < 20; ++k) {
      const double x = u(rng);
      EXPECT_LE(std::abs(p(x) - sp(x)), 1e-10 * (1.0 + std::abs(p(x))));
    }
  }
}

TEST(ShiftedPolynomial, ProportionalityDefect) {
  const std::vector<double> a{1.0, 2.0, 3.0};
  const std::vector<double> b{-2.0, -4.0, -6.0};
  EXPECT_NEAR(proportionality_defect(a, b), 0.0, 1e-16);
  EXPECT_GT(proportionality_defect(a, std::vector<double>{1.0, 2.0, 3.1}), 1e-5);
}

TEST(Classical, LaguerreLowDegrees) {
  EXPECT_EQ(laguerre_eval(0, 3.3, -1.2), 1.0);
  EXPECT_DOUBLE_EQ(laguerre_eval(1, 0.7, 2.0), 1.0 + 0.7 - 2.0);
  EXPECT_DOUBLE_EQ(laguerre_eval(2, 0.0, 1.0), -0.5);
  EXPECT_THROW(laguerre_eval(-1, 0.0, 1.0), DomainError);
}

TEST(Classical, JacobiLowDegrees) {
  EXPECT_EQ(jacobi_eval(0, 1.0, 2.0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(jacobi_eval(1, 1.7, -0.4, 1.0), 2.7);
  const double a = 2.0, b = 4.0;
  for (double x : {-0.9, 0.1, 3.0})
    EXPECT_NEAR(jacobi_eval(1, -a - 1.0, b - 1.0, x), ((b - a) * x - (a + b)) / 2.0, 1e-14);
  EXPECT_THROW(jacobi_eval(-2, 0.0, 0.0, 0.0), DomainError);
}

TEST(Classical, RecurrenceMatchesClosedForms) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> par(-0.9, 3.0), xs(-2.0, 4.0);
  for (int i = 0; i < 20; ++i) {
    const double a = par(rng), b = par(rng), x = xs(rng);
    auto close = [](double got, double want) { return std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)); };
    EXPECT_TRUE(close(laguerre_eval(1, a, x), 1.0 + a - x));
    EXPECT_TRUE(close(laguerre_eval(2, a, x), x * x / 2.0 - (a + 2.0) * x + (a + 1.0) * (a + 2.0) / 2.0));
    EXPECT_TRUE(close(jacobi_eval(1, a, b, x), (a - b) / 2.0 + (a + b + 2.0) * x / 2.0));
    const double p2 = (a + 1) * (a + 2) / 2.0 + (a + 2) * (a + b + 3) * (x - 1) / 2.0 +
                      (a + b + 3) * (a + b + 4) * (x - 1) * (x - 1) / 8.0;
    EXPECT_TRUE(close(jacobi_eval(2, a, b, x), p2)) << a << ' ' << b << ' ' << x;
  }
}

TEST(Classical, CoefficientFormsMatchEvaluation) {
  for (int n = 0; n <= 8; ++n)
    for (double x : {-1.5, 0.25, 0.9, 3.0}) {
      EXPECT_NEAR(laguerre_poly(n, 0.6)(x), laguerre_eval(n, 0.6, x), 1e-11 * (1 + std::abs(laguerre_eval(n, 0.6, x))));
      EXPECT_NEAR(jacobi_poly(n, 1.5, -0.5)(x), jacobi_eval(n, 1.5, -0.5, x),
                  1e-11 * (1 + std::abs(jacobi_eval(n, 1.5, -0.5, x))));
    }
}
