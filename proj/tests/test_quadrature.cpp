#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "test_support.hpp"
#include "xop/errors.hpp"
#include "xop/quadrature.hpp"

using namespace xop;
using xop::test::rel_err;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST(Quadrature, GammaIntegralOnHalfLine) {
  const QuadResult r = integrate([](double x) { return std::sqrt(x) * std::exp(-x); }, {0.0, kInf});
  EXPECT_LT(rel_err(r.value, std::sqrt(std::numbers::pi) / 2.0), 1e-12);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_GT(r.evaluations, 0);
}

TEST(Quadrature, ExponentialMapAgrees) {
  QuadratureSpec s;
  s.infinite_map = InfiniteMap::exponential;
  const QuadResult r = integrate([](double x) { return std::sqrt(x) * std::exp(-x); }, {0.0, kInf}, s);
  EXPECT_LT(rel_err(r.value, std::sqrt(std::numbers::pi) / 2.0), 1e-12);
}

TEST(Quadrature, BetaTypePolynomialIntegral) {
  const QuadResult r =
      integrate([](double x) { return std::pow(1 - x, 2) * std::pow(1 + x, 4); }, {-1.0, 1.0});
  EXPECT_LT(rel_err(r.value, 6144.0 / 5040.0), 1e-13);
}

TEST(Quadrature, AlgebraicEndpointSingularity) {
  const QuadResult r = integrate([](double x) { return 1.0 / std::sqrt(x); }, {0.0, 1.0});
  EXPECT_LT(rel_err(r.value, 2.0), 1e-12);
}

TEST(Quadrature, NodeDistancesResolveUpperEndpoint) {
  // (1 - x)^-0.9 cannot be formed from x alone near x = 1.
  const QuadResult r =
      integrate_nodes([](const QuadNode& n) { return std::pow(n.from_upper, -0.9); }, {0.0, 1.0});
  EXPECT_LT(rel_err(r.value, 10.0), 1e-10);
}

TEST(Quadrature, WholeAndLowerHalfLine) {
  EXPECT_LT(rel_err(integrate([](double x) { return std::exp(-x * x); }, {-kInf, kInf}).value,
                    std::sqrt(std::numbers::pi)),
            1e-12);
  EXPECT_LT(rel_err(integrate([](double x) { return std::exp(x); }, {-kInf, 0.0}).value, 1.0), 1e-12);
  EXPECT_LT(rel_err(integrate([](double x) { return std::exp(-(x - 2.0)); }, {2.0, kInf}).value, 1.0), 1e-12);
}

TEST(Quadrature, SmoothModeOnSmoothIntegrand) {
  QuadratureSpec s;
  s.endpoints = EndpointMode::none;
  EXPECT_LT(rel_err(integrate([](double x) { return std::cos(x); }, {0.0, 1.0}, s).value, std::sin(1.0)), 1e-13);
}

TEST(Quadrature, ExtendedAccumulationAgrees) {
  QuadratureSpec s;
  s.extended_accumulation = true;
  const auto f = [](double x) { return std::pow(x, -0.25) * std::exp(-x); };
  EXPECT_LT(rel_err(integrate(f, {0.0, kInf}, s).value, std::tgamma(0.75)), 1e-12);
}

TEST(Quadrature, Deterministic) {
  const auto f = [](double x) { return std::pow(x, 0.3) * std::exp(-x) / ((x + 0.7) * (x + 0.7)); };
  const QuadResult a = integrate(f, {0.0, kInf});
  const QuadResult b = integrate(f, {0.0, kInf});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.error_estimate, b.error_estimate);
}

TEST(Quadrature, SpecValidation) {
  QuadratureSpec s;
  s.rel_tol = 0.0;
  EXPECT_THROW(s.validate(), DomainError);
  s = {};
  s.abs_tol = -1.0;
  EXPECT_THROW(s.validate(), DomainError);
  s = {};
  s.max_depth = 0;
  EXPECT_THROW(integrate([](double) { return 1.0; }, {0.0, 1.0}, s), DomainError);
}

TEST(Quadrature, RejectsEmptyInterval) {
  EXPECT_THROW(integrate([](double) { return 1.0; }, {1.0, 0.0}), DomainError);
}

TEST(Quadrature, NonFiniteIntegrandIsDomainError) {
  EXPECT_THROW(integrate([](double) { return std::nan(""); }, {0.0, 1.0}), DomainError);
}

TEST(Quadrature, NonConvergenceCarriesBestEstimate) {
  QuadratureSpec s;
  s.max_depth = 2;
  s.rel_tol = 1e-15;
  s.abs_tol = 1e-300;
  try {
    integrate([](double x) { return std::sin(200.0 * x); }, {0.0, 1.0}, s);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_TRUE(std::isfinite(e.best_estimate()));
    EXPECT_GT(e.error_estimate(), 0.0);
  }
}
