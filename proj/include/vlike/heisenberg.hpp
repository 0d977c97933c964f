#pragma once

// Loop modules A_psi t^i of the Heisenberg subalgebra <D(k b2), h(b2)> with
// zero center: D(k b2) t^m = psi(D(k b2)) t^{m+k}, h(b2) t^m = 0.

#include <cstdint>
#include <set>

#include "vlike/functionals.hpp"

namespace vlike {

struct HeisenbergAction {
  Scalar coef;
  std::int64_t exponent;
};

/// D(k b2) applied to t^m.
HeisenbergAction act_heisenberg(const FSequence& f, std::int64_t k, std::int64_t m);
/// h(b2) applied to t^m.
inline HeisenbergAction act_center(std::int64_t m) { return {Scalar(0), m}; }

/// gcd{ |k| <= bound : psi(D(k b2)) != 0 }, or 0 when that set is empty.
std::int64_t support_gcd(const FSequence& f, std::int64_t bound);

/// Exponents in [i - bound, i + bound] reachable from t^i through nonzero
/// D(k b2), |k| <= bound. Intermediate exponents may range over
/// [i - 2 bound, i + 2 bound].
std::set<std::int64_t> reachable_exponents(const FSequence& f, std::int64_t i, std::int64_t bound);

struct LoopModuleReport {
  bool irreducible = false;
  std::int64_t period = 0;  // s; 0 means the trivial module A_{0,i,0}
  std::int64_t bound = 0;
  bool stabilized = false;  // period unchanged at 2*bound
};

/// Irreducible iff the reachable set is exactly (i + sZ) within the bound.
LoopModuleReport is_irreducible_loop(const FSequence& f, std::int64_t i, std::int64_t bound);

}  // namespace vlike
