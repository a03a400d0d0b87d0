#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "test_support.hpp"
#include "xop/detrep.hpp"
#include "xop/errors.hpp"
#include "xop/specfun.hpp"
#include "xop/verify.hpp"

using namespace xop;
using xop::test::GridPoint;

namespace {

std::vector<double> monic(const Polynomial& p) {
  std::vector<double> c(p.coefficients().begin(), p.coefficients().end());
  const double lead = c.back();
  for (double& v : c) v /= lead;
  return c;
}

void expect_coeffs(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], tol * (1.0 + std::abs(want[i]))) << i;
}

}  // namespace

TEST(Detrep, MatrixLayoutTypeIII) {
  const FamilyDescriptor f = make_family(FamilyKind::laguerre_III, -0.5);
  const MomentTable mu = generate_moments(f, 6);
  const MomentMatrix m = build_matrix(f, 2, mu);
  ASSERT_EQ(m.a.size(), 3u);
  EXPECT_EQ(static_cast<double>(m.a(0, 0)), 0.0);  // e0 vanishes for Type III
  EXPECT_DOUBLE_EQ(static_cast<double>(m.a(0, 1)), f.e1());
  EXPECT_EQ(static_cast<double>(m.a(0, 2)), 0.0);
  for (int j = 0; j < 3; ++j) {
    EXPECT_DOUBLE_EQ(static_cast<double>(m.a(1, j)), mu[j]);  // c10 = 1, c11 = 0
    EXPECT_DOUBLE_EQ(static_cast<double>(m.a(2, j)), mu[j + 2]);
  }
  EXPECT_EQ(static_cast<double>(m.b[0]), 0.0);
  EXPECT_DOUBLE_EQ(static_cast<double>(m.b[2]), norm_Kn(f, 2));
}

TEST(Detrep, MatrixLayoutTypeI) {
  const double a = 0.7;
  const FamilyDescriptor f = make_family(FamilyKind::laguerre_I, a);
  const MomentTable mu = generate_moments(f, 4);
  const MomentMatrix m = build_matrix(f, 1, mu);
  EXPECT_DOUBLE_EQ(static_cast<double>(m.a(0, 0)), -2 * a);
  EXPECT_DOUBLE_EQ(static_cast<double>(m.a(0, 1)), 2 * a);
  EXPECT_DOUBLE_EQ(static_cast<double>(m.a(1, 0)), mu[0] + mu[1]);
  EXPECT_DOUBLE_EQ(static_cast<double>(m.a(1, 1)), mu[1] + mu[2]);
}

TEST(Detrep, TypeIIIDegreeZero) {
  const FamilyDescriptor f = make_family(FamilyKind::laguerre_III, -0.5);
  const MomentTable mu = generate_moments(f, 2);
  const MomentMatrix m = build_matrix(f, 0, mu);
  ASSERT_EQ(m.a.size(), 1u);
  EXPECT_DOUBLE_EQ(static_cast<double>(m.a(0, 0)), mu[0]);
  const ExceptionalPolynomial y = exceptional_polynomial(f, 0);
  ASSERT_EQ(y.monomial.degree(), 0);
  EXPECT_NEAR(y.monomial.coeff(0) * mu[0], norm_Kn(f, 0), 1e-12);
}

TEST(Detrep, Preconditions) {
  const FamilyDescriptor f = make_family(FamilyKind::laguerre_I, 0.5);
  const MomentTable short_table = generate_moments(f, 3);
  EXPECT_THROW(build_matrix(f, 2, short_table), DomainError);
  EXPECT_THROW(build_matrix(f, 0, short_table), InadmissibleDegree);
  const FamilyDescriptor t3 = make_family(FamilyKind::laguerre_III, -0.5);
  EXPECT_THROW(exceptional_polynomial(t3, 1), InadmissibleDegree);
  EXPECT_EQ(required_moment_index(0), 2);
  EXPECT_EQ(required_moment_index(4), 8);
}

TEST(Detrep, TypeIIIDegreeTwoClosedForm) {
  for (double a : {-0.25, -0.5, -0.75}) {
    const ExceptionalPolynomial y = exceptional_polynomial(make_family(FamilyKind::laguerre_III, a), 2);
    expect_coeffs(monic(y.monomial), {a * (a + 1), -2 * a, 1.0}, 1e-10);
  }
}

TEST(Detrep, TypeIDegreeOne) {
  for (double a : {0.5, 1.5, 3.0}) {
    const ExceptionalPolynomial y = exceptional_polynomial(make_family(FamilyKind::laguerre_I, a), 1);
    expect_coeffs(monic(y.monomial), {a + 1, 1.0}, 1e-10);
  }
}

TEST(Detrep, JacobiDegreeOneIsFirstFlagElement) {
  const double a = 2.0, b = 4.0;
  const FamilyDescriptor f = make_family(FamilyKind::jacobi, a, b);
  const ExceptionalPolynomial y = exceptional_polynomial(f, 1);
  const std::vector<double> y1{-1.0 / (b - a), 0.5};
  EXPECT_LT(proportionality_defect(y.shifted.coeffs, y1), 1e-13);
}

TEST(Detrep, ReferencePolynomials) {
  // mpmath: exact-arithmetic solve of the same linear system at 40 digits.
  struct Case {
    GridPoint point;
    int n;
    std::vector<double> coeffs;
  };
  const Case cases[] = {
      {{FamilyKind::laguerre_I, 0.5, {}}, 2, {-1.25, 0, 1}},
      {{FamilyKind::laguerre_I, 1.5, {}}, 3, {16.875, -6.75, -4.5, 1}},
      {{FamilyKind::laguerre_III, -0.25, {}}, 3, {0.328125, -1.3125, -2.25, 1}},
      {{FamilyKind::jacobi, 2.0, 4.0}, 3, {0.2222222222222222, 1.4444444444444444, -4, 1}},
      {{FamilyKind::jacobi, -0.5, -0.25}, 2, {1, 7.6, 1}},
  };
  for (const Case& c : cases) {
    SCOPED_TRACE(c.point.label());
    expect_coeffs(monic(exceptional_polynomial(c.point.make(), c.n).monomial), c.coeffs, 1e-10);
  }
}

TEST(Detrep, OrthogonalToLowerFlagAndNormalized) {
  for (const GridPoint& g : xop::test::standard_grid()) {
    SCOPED_TRACE(g.label());
    const FamilyDescriptor f = g.make();
    const MomentTable mu = generate_moments(f, 12);
    for (int n = 0; n <= 6; ++n) {
      if (!f.admissible(n)) continue;
      const ExceptionalPolynomial y = exceptional_polynomial(f, n, mu);
      const double kn = norm_Kn(f, n);
      for (int k = 2; k <= n; ++k) {
        ShiftedPolynomial vk{f.xi, std::vector<double>(k + 1, 0.0)};
        vk.coeffs[k] = 1.0;
        const double ip = adjusted_inner_product(y.shifted, vk, mu);
        // Rounding of the double coefficients is amplified by the moment sizes.
        double scale = 0.0;
        for (int i = 0; i <= n; ++i) scale += std::abs(y.shifted.coeffs[i] * mu[i + k]);
        const double target = k < n ? 0.0 : kn;
        EXPECT_LE(std::abs(ip - target), 1e-13 * scale) << "n=" << n << " k=" << k;
      }
      EXPECT_LE(exceptional_condition(f, y.monomial).relative(), 1e-10) << "n=" << n;
    }
  }
}

TEST(Detrep, FirstRowScalingInvariance) {
  for (const GridPoint& g : xop::test::standard_grid()) {
    const FamilyDescriptor f = g.make();
    const MomentTable mu = generate_moments(f, 12);
    for (int n : {2, 4}) {
      const ExceptionalPolynomial ref = exceptional_polynomial(f, n, mu);
      for (double gamma : {1e-3, 1e3}) {
        const ExceptionalPolynomial y = exceptional_polynomial(f, n, mu, gamma);
        for (std::size_t i = 0; i < ref.shifted.coeffs.size(); ++i) {
          EXPECT_NEAR(y.shifted.coeffs[i], ref.shifted.coeffs[i], 1e-10 * ref.monomial.max_norm())
              << g.label() << " n=" << n << " gamma=" << gamma;
        }
      }
    }
  }
}

TEST(Detrep, CofactorExpansionMatchesSolve) {
  for (const GridPoint& g : xop::test::standard_grid()) {
    const FamilyDescriptor f = g.make();
    const MomentTable mu = generate_moments(f, 10);
    for (int n = 2; n <= 5; ++n) {
      const ExceptionalPolynomial y = exceptional_polynomial(f, n, mu);
      const ShiftedPolynomial c = exceptional_polynomial_cofactor(build_matrix(f, n, mu), f.xi);
      ASSERT_EQ(c.coeffs.size(), y.shifted.coeffs.size());
      double scale = 0.0;
      for (double v : y.shifted.coeffs) scale = std::max(scale, std::abs(v));
      for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        EXPECT_NEAR(c.coeffs[i], y.shifted.coeffs[i], 1e-10 * scale) << g.label() << " n=" << n;
    }
  }
}

TEST(Detrep, GramSchmidtMatchesSolve) {
  for (const GridPoint& g : xop::test::standard_grid()) {
    const FamilyDescriptor f = g.make();
    const MomentTable mu = generate_moments(f, 12);
    for (int n = 2; n <= 6; ++n) {
      const ShiftedPolynomial gs = gram_schmidt_polynomial(f, n, mu);
      const ExceptionalPolynomial y = exceptional_polynomial(f, n, mu);
      EXPECT_LT(proportionality_defect(gs.coeffs, y.shifted.coeffs), 1e-8) << g.label() << " n=" << n;
    }
  }
}

TEST(Detrep, TypesIAndIIGiveTheSamePolynomial) {
  for (double a : {0.5, 1.5}) {
    for (int n = 1; n <= 5; ++n) {
      const auto y1 = exceptional_polynomial(make_family(FamilyKind::laguerre_I, a), n);
      const auto y2 = exceptional_polynomial(make_family(FamilyKind::laguerre_II, a), n);
      EXPECT_LT(proportionality_defect(y1.monomial.coefficients(), y2.monomial.coefficients()), 1e-12);
    }
  }
}

TEST(Detrep, InnerProductUsesMomentTable) {
  const FamilyDescriptor f = make_family(FamilyKind::laguerre_I, 0.5);
  const MomentTable mu = generate_moments(f, 6);
  const ShiftedPolynomial one{f.xi, {1.0}};
  const ShiftedPolynomial lin{f.xi, {2.0, 3.0}};
  EXPECT_DOUBLE_EQ(adjusted_inner_product(one, one, mu), mu[0]);
  EXPECT_NEAR(adjusted_inner_product(lin, lin, mu), 4 * mu[0] + 12 * mu[1] + 9 * mu[2], 1e-12);
}

TEST(Detrep, SingularSystemIsReported) {
  const FamilyDescriptor f = make_family(FamilyKind::laguerre_I, 0.5);
  MomentTable mu = generate_moments(f, 4);
  for (double& v : mu.values) v = 1.0;
  for (wide_real& v : mu.wide) v = 1.0;
  // Rows two and three coincide up to the c10/c11 combination.
  EXPECT_THROW(exceptional_polynomial(f, 2, mu), SingularMatrixError);
}

TEST(Detrep, ConditionEstimateIsReported) {
  const FamilyDescriptor f = make_family(FamilyKind::jacobi, 2.0, 4.0);
  const ExceptionalPolynomial y = exceptional_polynomial(f, 6);
  EXPECT_GE(y.condition_estimate, 1.0);
  EXPECT_TRUE(std::isfinite(y.condition_estimate));
  EXPECT_EQ(y.ill_conditioned, y.condition_estimate > kIllConditioned);
}
