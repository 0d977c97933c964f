#include "vlike/linalg.hpp"

#include <utility>

namespace vlike {

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!vlike::is_zero(x)) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
  }

  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Integer& p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer f = a[r][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (p * a[r][k] - f * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(row, k));
    }
    const Scalar inv = Scalar(1) / m(row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      const Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<std::vector<Scalar>> kernel(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve_in_columns(const Matrix& m, const std::vector<std::size_t>& cols,
                                                    const std::vector<Scalar>& target) {
  Matrix aug(m.rows(), cols.size() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) aug(r, j) = m(r, cols[j]);
    aug(r, cols.size()) = target[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == cols.size()) return std::nullopt;
  std::vector<Scalar> coef(cols.size(), Scalar(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) coef[e.pivots[r]] = e.reduced(r, cols.size());
  return coef;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  return rref(m).pivots;
}

}  // namespace vlike
