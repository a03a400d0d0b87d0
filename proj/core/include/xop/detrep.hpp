#pragma once

#include <vector>

#include "xop/family.hpp"
#include "xop/linalg.hpp"
#include "xop/moments.hpp"
#include "xop/polynomial.hpp"

namespace xop {

/// The (n+1) x (n+1) system A c = b for the Taylor coefficients c_i of the
/// degree-n polynomial around xi:
///   row 1      [-e0, e1, 0, ..., 0]          (exceptional condition)
///   row 2      c10 mu_j + c11 mu_{j+1}       (orthogonality to the first flag element)
///   rows 3..   mu_{l-1+j}                    (orthogonality to (x - xi)^{l-1})
/// with b = (0, ..., 0, K_n). Type III degree 0 is the 1 x 1 system [mu_0].
struct MomentMatrix {
  FamilyKind kind{};
  int n = 0;
  double e0 = 0;
  double e1 = 0;
  double row1_scale = 1.0;
  double Kn = 0;
  DenseMatrix<wide_real> a;
  std::vector<wide_real> b;

  DenseMatrix<double> as_double() const;
};

/// Throws InadmissibleDegree, or DomainError when the table stops before mu_{2n}.
MomentMatrix build_matrix(const FamilyDescriptor& family, int n, const MomentTable& moments, double row1_scale = 1.0);

/// Condition estimates above this are flagged in the result.
inline constexpr double kIllConditioned = 1e12;

struct ExceptionalPolynomial {
  ShiftedPolynomial shifted;
  Polynomial monomial;
  double condition_estimate = 0;
  bool ill_conditioned = false;
};

/// Solves A c = b by LU with partial pivoting. Throws SingularMatrixError.
ExceptionalPolynomial exceptional_polynomial(const FamilyDescriptor& family, int n, const MomentTable& moments,
                                             double row1_scale = 1.0);
/// Generates mu_0..mu_{2n} itself.
ExceptionalPolynomial exceptional_polynomial(const FamilyDescriptor& family, int n);

/// Coefficients from the cofactor expansion along the last row,
///   c_i = K_n (-1)^(n+i) det(A without row n, column i) / det A.
ShiftedPolynomial exceptional_polynomial_cofactor(const MomentMatrix& m, double center);

/// Number of moments a degree-n solve needs (indices 0..2n).
int required_moment_index(int n);

/// <f, g> = sum_ij f_i g_j mu_{i+j} for polynomials in the (x - xi) basis.
wide_real adjusted_inner_product(const std::vector<wide_real>& f, const std::vector<wide_real>& g,
                                 const MomentTable& moments);
double adjusted_inner_product(const ShiftedPolynomial& f, const ShiftedPolynomial& g, const MomentTable& moments);

/// Orthogonalizes the flag [y1, v2, ..., vn] (Type III: [1, v2, ..., vn]),
/// v_k = (x - xi)^k, under the adjusted-moment inner product and returns the
/// degree-n element. Throws SingularMatrixError on a vanishing pivot.
ShiftedPolynomial gram_schmidt_polynomial(const FamilyDescriptor& family, int n, const MomentTable& moments);

}  // namespace xop
