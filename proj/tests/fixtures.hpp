#pragma once

#include <vector>

#include "vlike/functionals.hpp"

namespace fixtures {

using vlike::ExpPolyFunctional;
using vlike::Scalar;

// psi(D(k b2)) = ((-1)^k + 1)/k, psi(h(b1)) = -2 det.
inline ExpPolyFunctional parity(int det = 1) {
  return ExpPolyFunctional({{Scalar(1), {Scalar(1)}}, {Scalar(-1), {Scalar(1)}}}, det);
}

// f == 1
inline ExpPolyFunctional one(int det = 1) { return ExpPolyFunctional({{Scalar(1), {Scalar(1)}}}, det); }

inline ExpPolyFunctional zero() { return ExpPolyFunctional(1); }

// Plain Gauss-Jordan rank, kept apart from the library's Bareiss path.
inline std::size_t naive_rank(std::vector<std::vector<Scalar>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Scalar q = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace fixtures
