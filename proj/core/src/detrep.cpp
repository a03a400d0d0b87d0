#include "xop/detrep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "xop/errors.hpp"

namespace xop {

namespace {

std::vector<wide_real> flag_element(const FamilyDescriptor& family, int k) {
  std::vector<wide_real> v(static_cast<std::size_t>(k) + 1, wide_real(0));
  if (k == 0) {
    v[0] = 1;
  } else if (k == 1) {
    v[0] = family.c10;
    v[1] = family.c11;
  } else {
    v.back() = 1;
  }
  return v;
}

ShiftedPolynomial to_shifted_double(const std::vector<wide_real>& c, double center) {
  ShiftedPolynomial sp{center, {}};
  sp.coeffs.reserve(c.size());
  for (const wide_real& v : c) sp.coeffs.push_back(static_cast<double>(v));
  return sp;
}

}  // namespace

int required_moment_index(int n) { return std::max(2 * n, 2); }

DenseMatrix<double> MomentMatrix::as_double() const {
  DenseMatrix<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = static_cast<double>(a(i, j));
  return out;
}

MomentMatrix build_matrix(const FamilyDescriptor& family, int n, const MomentTable& moments, double row1_scale) {
  family.require_admissible(n);
  if (moments.max_index() < 2 * n) {
    std::ostringstream msg;
    msg << "degree " << n << " needs moments up to index " << 2 * n << ", table stops at " << moments.max_index();
    throw DomainError(msg.str());
  }
  MomentMatrix m;
  m.kind = family.kind;
  m.n = n;
  m.e0 = family.e0();
  m.e1 = family.e1();
  m.row1_scale = row1_scale;
  m.Kn = norm_Kn(family, n);
  const auto size = static_cast<std::size_t>(n) + 1;
  m.a = DenseMatrix<wide_real>(size);
  m.b.assign(size, wide_real(0));
  m.b.back() = m.Kn;
  const auto& mu = moments.wide;

  if (n == 0) {
    m.a(0, 0) = mu[0];
    return m;
  }
  m.a(0, 0) = -wide_real(m.e0) * wide_real(row1_scale);
  m.a(0, 1) = wide_real(m.e1) * wide_real(row1_scale);
  for (std::size_t j = 0; j < size; ++j) {
    m.a(1, j) = wide_real(family.c10) * mu[j] + wide_real(family.c11) * mu[j + 1];
  }
  for (std::size_t l = 2; l < size; ++l) {
    for (std::size_t j = 0; j < size; ++j) m.a(l, j) = mu[l + j];
  }
  return m;
}

ExceptionalPolynomial exceptional_polynomial(const FamilyDescriptor& family, int n, const MomentTable& moments,
                                             double row1_scale) {
  const MomentMatrix m = build_matrix(family, n, moments, row1_scale);
  const LuDecomposition<wide_real> lu = lu_decompose(m.a);
  ExceptionalPolynomial out;
  out.condition_estimate = lu.singular ? std::numeric_limits<double>::infinity() : condition_1norm(m.a);
  if (lu.singular || !std::isfinite(out.condition_estimate)) {
    std::ostringstream msg;
    msg << "moment matrix for degree " << n << " is singular";
    throw SingularMatrixError(msg.str(), out.condition_estimate);
  }
  out.ill_conditioned = out.condition_estimate > kIllConditioned;
  out.shifted = to_shifted_double(lu.solve(m.b), family.xi);
  out.monomial = to_monomial(out.shifted);
  return out;
}

ExceptionalPolynomial exceptional_polynomial(const FamilyDescriptor& family, int n) {
  family.require_admissible(n);
  return exceptional_polynomial(family, n, generate_moments(family, required_moment_index(n)));
}

ShiftedPolynomial exceptional_polynomial_cofactor(const MomentMatrix& m, double center) {
  const std::size_t size = m.a.size();
  const wide_real det = determinant(m.a);
  if (det == wide_real(0)) throw SingularMatrixError("moment matrix is singular", std::numeric_limits<double>::infinity());
  std::vector<wide_real> c(size);
  const std::size_t last = size - 1;
  for (std::size_t i = 0; i < size; ++i) {
    const wide_real minor_det = determinant(m.a.minor(last, i));
    const wide_real sign = ((last + i) % 2 == 0) ? wide_real(1) : wide_real(-1);
    c[i] = m.b.back() * sign * minor_det / det;
  }
  return to_shifted_double(c, center);
}

wide_real adjusted_inner_product(const std::vector<wide_real>& f, const std::vector<wide_real>& g,
                                 const MomentTable& moments) {
  if (f.size() + g.size() > moments.size() + 1) {
    throw DomainError("moment table too short for the inner product");
  }
  wide_real acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) acc += f[i] * g[j] * moments.wide[i + j];
  return acc;
}

double adjusted_inner_product(const ShiftedPolynomial& f, const ShiftedPolynomial& g, const MomentTable& moments) {
  std::vector<wide_real> fw(f.coeffs.begin(), f.coeffs.end());
  std::vector<wide_real> gw(g.coeffs.begin(), g.coeffs.end());
  return static_cast<double>(adjusted_inner_product(fw, gw, moments));
}

ShiftedPolynomial gram_schmidt_polynomial(const FamilyDescriptor& family, int n, const MomentTable& moments) {
  family.require_admissible(n);
  if (moments.max_index() < 2 * n) throw DomainError("moment table too short for Gram-Schmidt");

  // Flag degrees: first element (degree 0 for Type III, 1 otherwise), then 2..n.
  std::vector<int> degrees{family.kind == FamilyKind::laguerre_III ? 0 : 1};
  for (int k = 2; k <= n; ++k) degrees.push_back(k);

  std::vector<std::vector<wide_real>> basis;
  std::vector<wide_real> norms;
  for (int d : degrees) {
    std::vector<wide_real> v = flag_element(family, d);
    v.resize(static_cast<std::size_t>(n) + 1, wide_real(0));
    const wide_real scale = adjusted_inner_product(v, v, moments);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const wide_real proj = adjusted_inner_product(v, basis[j], moments) / norms[j];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * basis[j][i];
    }
    const wide_real nn = adjusted_inner_product(v, v, moments);
    if (!(nn > wide_real(1e-14) * wide_abs(scale))) {
      std::ostringstream msg;
      msg << "flag is rank deficient at degree " << d;
      throw SingularMatrixError(msg.str(), std::numeric_limits<double>::infinity());
    }
    basis.push_back(std::move(v));
    norms.push_back(nn);
  }
  return to_shifted_double(basis.back(), family.xi);
}

}  // namespace xop
