#include "xop/linalg.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "xop/errors.hpp"

namespace xop {

template <class T>
DenseMatrix<T> DenseMatrix<T>::minor(std::size_t row, std::size_t col) const {
  DenseMatrix<T> m(n_ - 1);
  for (std::size_t i = 0, mi = 0; i < n_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < n_; ++j) {
      if (j == col) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

template <class T>
LuDecomposition<T> lu_decompose(const DenseMatrix<T>& a) {
  const std::size_t n = a.size();
  LuDecomposition<T> d;
  d.lu = a;
  d.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.perm[i] = i;
  DenseMatrix<T>& m = d.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    T best = wide_abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const T v = wide_abs(m(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == T(0)) {
      d.singular = true;
      continue;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(d.perm[k], d.perm[piv]);
      d.sign = -d.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const T f = m(i, k) / m(k, k);
      m(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

template <class T>
T LuDecomposition<T>::determinant() const {
  if (singular) return T(0);
  T det = T(sign);
  for (std::size_t i = 0; i < lu.size(); ++i) det *= lu(i, i);
  return det;
}

template <class T>
std::vector<T> LuDecomposition<T>::solve(const std::vector<T>& rhs) const {
  if (singular) throw SingularMatrixError("matrix is singular", std::numeric_limits<double>::infinity());
  const std::size_t n = lu.size();
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    T acc = rhs[perm[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= lu(i, j) * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    T acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= lu(i, j) * x[j];
    x[i] = acc / lu(i, i);
  }
  return x;
}

template <class T>
DenseMatrix<T> LuDecomposition<T>::inverse() const {
  const std::size_t n = lu.size();
  DenseMatrix<T> inv(n);
  std::vector<T> e(n, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    e.assign(n, T(0));
    e[j] = T(1);
    const std::vector<T> col = solve(e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

template <class T>
T determinant(const DenseMatrix<T>& a) {
  if (a.size() == 0) return T(1);
  return lu_decompose(a).determinant();
}

template <class T>
double norm1(const DenseMatrix<T>& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    T col = T(0);
    for (std::size_t i = 0; i < a.size(); ++i) col += wide_abs(a(i, j));
    best = std::max(best, static_cast<double>(col));
  }
  return best;
}

template <class T>
double condition_1norm(const DenseMatrix<T>& a) {
  const LuDecomposition<T> d = lu_decompose(a);
  if (d.singular) return std::numeric_limits<double>::infinity();
  return norm1(a) * norm1(d.inverse());
}

template class DenseMatrix<double>;
template class DenseMatrix<wide_real>;
template struct LuDecomposition<double>;
template struct LuDecomposition<wide_real>;

#define XOP_INSTANTIATE(T)                                      \
  template LuDecomposition<T> lu_decompose(const DenseMatrix<T>&); \
  template T determinant(const DenseMatrix<T>&);                \
  template double norm1(const DenseMatrix<T>&);                 \
  template double condition_1norm(const DenseMatrix<T>&);

XOP_INSTANTIATE(double)
XOP_INSTANTIATE(wide_real)

#undef XOP_INSTANTIATE

}  // namespace xop
