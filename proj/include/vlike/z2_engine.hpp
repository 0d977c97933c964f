#pragma once

// Z^2-graded modules: V(psi) = V^+(psi) (x) C[t^{+-1}] with
//   D(i b1 + j b2)(v (x) t^k) = (D(i b1 + j b2) v) (x) t^{k+j},
// its quotients, and the sl2 loop modules V(A) = V (x) C[t1^{+-1}, t2^{+-1}].

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vlike/heisenberg.hpp"
#include "vlike/hw_engine.hpp"

namespace vlike {

/// v (x) t^texp with v homogeneous of degree -level in the quotient,
/// given by coordinates in the engine's quotient basis at that level.
/// Level 0 has the single basis vector v0. Degree: -level b1 + texp b2.
struct TensorModuleElement {
  std::int64_t level = 0;
  std::vector<Scalar> coords;
  std::int64_t texp = 0;

  bool is_zero() const;
};

/// V(psi) under a fixed truncation of the highest weight factor.
class TensorModule {
 public:
  TensorModule(Weight psi, TruncationParams params);

  TensorModuleElement vacuum(std::int64_t texp) const { return {0, {Scalar(1)}, texp}; }

  /// D(i b1 + j b2) applied to elt. Throws PreconditionError
  /// ("truncation_overflow") when the image leaves the truncated level.
  TensorModuleElement act(const LatticeVector& bcoords, const TensorModuleElement& elt);

  /// h(x b1 + y b2) acts by x psi(h(b1)); h(b2) acts as zero.
  TensorModuleElement act_center(const LatticeVector& bcoords, const TensorModuleElement& elt) const;

  HighestWeightEngine& engine() { return engine_; }
  const TruncationParams& params() const { return params_; }

 private:
  HighestWeightEngine engine_;
  TruncationParams params_;
};

TensorModuleElement act_tensor(const LatticeVector& bcoords, const TensorModuleElement& elt, const Weight& psi,
                               const TruncationParams& params);

/// t-exponents of W_i = U(H)(v0 (x) t^i) inside [i - bound, i + bound].
std::set<std::int64_t> reachable_texp_set(const Weight& psi, std::int64_t i, std::int64_t bound);

struct ReducibilityReport {
  bool reducible = false;
  bool trivial_module = false;
  std::int64_t window = 0;
  /// A word u with u (v0 (x) t) a nonzero multiple of v0 (x) t^{even}.
  std::optional<std::vector<LatticeVector>> witness;
};

/// Certifies that U(L)(v0 (x) t) misses every v0 (x) t^e, e even, |e| <= window:
/// the Heisenberg orbit of t^1 contains no even exponent and no word of at
/// most `maxwordlength` generators D(i,j), |i| <= 1, |j| <= window, reaches one.
ReducibilityReport remark42_reducibility(const Weight& psi, std::int64_t window, std::size_t maxwordlength = 3);

/// dim of the (m b1 + k b2)-piece of U(L)(v0 (x) t^i), the quotient V(psi, i, s).
/// Requires s >= 1 to match the reachable period of psi.
std::int64_t quotient_dim_z2(const Weight& psi, std::int64_t m, std::int64_t k, std::int64_t i, std::int64_t s,
                             const TruncationParams& params);

struct Lemma45Report {
  bool independent = false;
  bool trivial_module = false;  // psih == 0
  std::size_t rank = 0;
};

/// Rank test for { lambda_k psih + sum_j lambda_j (j-k)^2 = 0, 1 <= k <= n }
/// together with { sum_j lambda_j (j-k)^2 = 0, k = n+1..n+3 }.
Lemma45Report lemma45_independence(std::int64_t n, const Scalar& psih);
Matrix lemma45_system(std::int64_t n, const Scalar& psih);

struct Sl2Rep {
  std::int64_t dim = 1;
  Matrix xplus;
  Matrix xminus;
  Matrix h;

  /// [h,x+] = 2x+, [h,x-] = -2x-, [x+,x-] = h, exactly.
  bool satisfies_chevalley() const;
};

/// Standard irreducible rep of highest weight d-1 on v_0..v_{d-1}.
Sl2Rep sl2_irrep(std::int64_t d);

/// Which of the two readings of the operator part
///   m2^2 x- - m1^2 x+ (+-) m1 m2 h
/// makes D(m) -> rho(D(m)) a representation.
class SignResolutionError : public std::runtime_error {
 public:
  enum class Kind { NoValidSign, AmbiguousSign };
  SignResolutionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct LoopSl2Module {
  Sl2Rep rep;
  Scalar alpha1 = 0;
  Scalar alpha2 = 0;
  int sign = 0;  // 0 = unresolved
};

/// Probes both signs on a fixed set of >= 12 pairs; d == 1 returns +1.
int resolve_sign(std::int64_t d);

LoopSl2Module make_loop_module(std::int64_t d, Scalar alpha1, Scalar alpha2);

/// rho(D(m)) on V (x) t^n as a d x d matrix (target exponent n + m).
Matrix loop_operator(const LatticeVector& m, const LatticeVector& n, const LoopSl2Module& mod);

/// D(m)(v (x) t^n) = (scalar part + operator part) v (x) t^{n+m}.
std::pair<std::vector<Scalar>, LatticeVector> act_loop_sl2(const LatticeVector& m, const std::vector<Scalar>& v,
                                                           const LatticeVector& n, const LoopSl2Module& mod);

/// rho([D(m),D(n)]) == [rho(D(m)), rho(D(n))] on V (x) t^p, exactly.
bool loop_bracket_holds(const LatticeVector& m, const LatticeVector& n, const LatticeVector& p,
                        const LoopSl2Module& mod);

struct LoopWitness {
  LatticeVector degree;
  std::vector<Scalar> vector;  // empty when no rational witness is singled out
  std::string reason;
};

struct LoopVerdict {
  bool irreducible = false;
  std::int64_t window = 0;
  std::optional<LoopWitness> witness;
};

/// Window evidence for irreducibility of V(A) under D(+-e1), D(+-e2),
/// D(+-(e1+e2)), restricted to degrees with |n|_inf <= window.
LoopVerdict loop_irreducibility_window(const LoopSl2Module& mod, std::int64_t window);

}  // namespace vlike
