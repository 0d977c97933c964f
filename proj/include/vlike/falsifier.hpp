#pragma once

// Structure constants of a would-be Z-graded module of the intermediate
// series: D(b1) v_i = a v_{i+1}, D(-b1) v_i = a v_{i-1},
// D(l b1 + k b2) v_i = f(l,k,i) v_{l+i}.

#include <cstdint>
#include <optional>
#include <vector>

#include "vlike/scalar.hpp"

namespace vlike {

struct ISCandidate {
  Scalar a;
  int eps = 1;
  std::int64_t k = 1;

  void validate() const;
};

/// f(l,k,i+1) from f(l,k,i-1), f(l,k,i). k = 0 is accepted here and gives
/// the degenerate stencil 2 fcur - fprev; use stencil_degenerate to flag it.
Scalar recurrence_step_53(const Scalar& a, std::int64_t k, const Scalar& fprev, const Scalar& fcur);
inline bool stencil_degenerate(std::int64_t k) { return k == 0; }

/// f(l,k,i) for fixed k on the box [l0, l0+rows) x [i0, i0+cols).
struct FTable {
  std::int64_t l0 = 0;
  std::int64_t i0 = 0;
  std::vector<std::vector<Scalar>> values;

  std::int64_t rows() const { return static_cast<std::int64_t>(values.size()); }
  std::int64_t cols() const { return values.empty() ? 0 : static_cast<std::int64_t>(values.front().size()); }
  const Scalar& at(std::int64_t l, std::int64_t i) const;
  Scalar& at(std::int64_t l, std::int64_t i);
};

/// Both first-order difference identities linking rows l-1 and l, at every
/// point of the box where the stencil fits. Throws on k = 0 or a ragged box.
bool check_51_52(const ISCandidate& c, const FTable& f);

/// The second-order stencil in i on rows l0 .. l0+rows-2 (the rows whose
/// successor is in the box, which is where it follows from check_51_52).
bool check_53(const ISCandidate& c, const FTable& f);

/// t_l = x^l + x^{-l} for the roots x, 1/x of a^2 T^2 - (2a^2 + k^2) T + a^2.
struct TraceSequence {
  Scalar a;
  std::int64_t k = 0;
  std::vector<Scalar> t;

  bool strictly_increasing_from(std::size_t l) const;
};

TraceSequence trace_sequence(const Scalar& a, std::int64_t k, std::int64_t lmax);

/// With (x^l - 1)(1 - x^{-l}) = t_l - 2, the surviving constraint reads
/// l^2 k^2 = C (t_l - 2). C is fixed at l = 1; residue = C (t_l - 2) - l^2 k^2
/// at the first l where it is nonzero.
struct Certificate {
  Scalar a;
  std::int64_t k = 0;
  Scalar C;
  std::optional<std::int64_t> failure_l;
  Scalar residue;

  bool contradiction() const { return failure_l.has_value(); }
};

Certificate falsify(const Scalar& a, std::int64_t k, std::int64_t lmax);

}  // namespace vlike
