#pragma once

// Dense exact matrices over Q. Rank goes through fraction-free (Bareiss)
// elimination on integer rows; kernels and solves go through RREF.

#include <cstddef>
#include <optional>
#include <vector>

#include "vlike/scalar.hpp"

namespace vlike {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank via Bareiss elimination after clearing row denominators.
std::size_t rank(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

/// Coefficients c with sum_j c_j * column(cols[j]) == target, or nullopt when
/// target is outside the span. The listed columns must be independent.
std::optional<std::vector<Scalar>> solve_in_columns(const Matrix& m, const std::vector<std::size_t>& cols,
                                                    const std::vector<Scalar>& target);

/// Indices of a maximal independent set of columns (first-come order).
std::vector<std::size_t> independent_columns(const Matrix& m);

}  // namespace vlike
