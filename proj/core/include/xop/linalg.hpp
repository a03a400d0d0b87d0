#pragma once

#include <cstddef>
#include <vector>

#include "xop/wide_real.hpp"

namespace xop {

/// Small dense square matrix, row-major.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Matrix with row `row` and column `col` removed.
  DenseMatrix minor(std::size_t row, std::size_t col) const;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// LU factorization with partial pivoting, P A = L U.
template <class T>
struct LuDecomposition {
  DenseMatrix<T> lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;  ///< an exactly zero pivot was met

  T determinant() const;
  /// Throws SingularMatrixError when singular.
  std::vector<T> solve(const std::vector<T>& rhs) const;
  DenseMatrix<T> inverse() const;
};

template <class T>
LuDecomposition<T> lu_decompose(const DenseMatrix<T>& a);

template <class T>
T determinant(const DenseMatrix<T>& a);

template <class T>
double norm1(const DenseMatrix<T>& a);

/// ||A||_1 ||A^-1||_1 from the explicit inverse; infinity when singular.
template <class T>
double condition_1norm(const DenseMatrix<T>& a);

extern template class DenseMatrix<double>;
extern template class DenseMatrix<wide_real>;
extern template struct LuDecomposition<double>;
extern template struct LuDecomposition<wide_real>;

}  // namespace xop
