#include <doctest.h>

#include "fixtures.hpp"
#include "vlike/linalg.hpp"

using namespace vlike;

namespace {

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(from_rows({{make_scalar(1, 2), make_scalar(1, 3)}, {make_scalar(1, 4), make_scalar(1, 5)}})) == 2);
  // Hilbert matrices are nonsingular.
  for (std::size_t n = 1; n <= 7; ++n) {
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) h(i, j) = make_scalar(1, static_cast<std::int64_t>(i + j + 1));
    }
    CHECK(rank(h) == n);
  }
}

TEST_CASE("rank agrees with plain elimination") {
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < 6; ++i) {
    std::vector<Scalar> row;
    for (int j = 0; j < 5; ++j) row.push_back(make_scalar((i * 7 + j * 3) % 5 - 2, 1 + (i + j) % 3));
    rows.push_back(row);
  }
  std::vector<Scalar> dependent(5);
  for (std::size_t j = 0; j < 5; ++j) dependent[j] = rows[0][j] + 3 * rows[1][j];
  rows.push_back(dependent);
  const Matrix m = from_rows(rows);
  CHECK(rank(m) == fixtures::naive_rank(rows));
  CHECK(rank(m.transpose()) == rank(m));
}

TEST_CASE("kernel vectors are annihilated and count is nullity") {
  const Matrix m = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  const auto ker = kernel(m);
  CHECK(ker.size() == m.cols() - rank(m));
  for (const auto& v : ker) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Scalar s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("solve in selected columns") {
  const Matrix m = from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
  const auto cols = independent_columns(m);
  CHECK(cols == std::vector<std::size_t>{0, 1});
  const auto c = solve_in_columns(m, cols, {3, 5, 8});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 3);
  CHECK((*c)[1] == 5);
  CHECK_FALSE(solve_in_columns(m, cols, {1, 1, 1}).has_value());
  const auto e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
}
