#pragma once

// Dense row-major matrix over an exact scalar type, and determinants:
// fraction-free elimination for rationals and polynomials, cofactor
// expansion (memoised over column subsets) for small polynomial matrices.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "permcf/poly.hpp"

namespace permcf {

template <typename Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Rational det_bareiss(Matrix<Rational> m);
MultiPoly det_bareiss(Matrix<MultiPoly> m);
MultiPoly det_cofactor(const Matrix<MultiPoly>& m);

/// Rational elimination when every entry is constant, otherwise fraction-free
/// elimination with exact division.  Cofactor expansion is far slower on
/// dense symbolic Hankel matrices and is kept as a cross-check.
MultiPoly determinant(const Matrix<MultiPoly>& m);

}  // namespace permcf
