#pragma once

// Highest weight modules over L for the Z-grading by b1-degree.
//
// The induced module is U(L_-) v0. Its irreducible quotient at level -n is
// the lowering span modulo the radical of the pairing
//   <u, w> = coefficient of v0 in u w v0,   u raising of degree n,
// which is evaluated exactly by normal ordering arbitrary words. Levels are
// made finite by bounding the b2-coordinate of every PBW factor (the band).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "vlike/functionals.hpp"
#include "vlike/lattice.hpp"
#include "vlike/linalg.hpp"

namespace vlike {

/// Ordered product of generators D(i b1 + j b2), each stored in
/// b-coordinates (i, j). Canonical words are sorted ascending by (i, j).
struct PBWWord {
  std::vector<LatticeVector> factors;

  std::int64_t degree() const;  // total b1-degree
  bool is_lowering() const;     // every factor has i < 0
  bool is_raising() const;      // every factor has i > 0
  auto operator<=>(const PBWWord&) const = default;
};

struct TruncationParams {
  std::int64_t band = 2;         // |j| bound on lowering factors
  std::int64_t raisingband = 2;  // |j| bound on raising factors, >= band
  std::int64_t maxlevel = 2;

  void validate() const;
  /// One stabilization step: band -> 2 band + 1 on both sides.
  TruncationParams stepped() const;
};

struct DimensionReport {
  std::int64_t level = 0;  // n for the homogeneous piece of degree -n
  std::int64_t dim = 0;
  std::int64_t band = 0;
  std::int64_t raisingband = 0;
  bool stabilized = false;
  std::int64_t lowerbound = 0;
  std::optional<std::int64_t> upperbound;  // nullopt = unbounded
};

/// Canonical lowering words of degree -n with factors |j| <= band.
std::vector<PBWWord> verma_level_span(std::int64_t n, std::int64_t band);
/// Canonical raising words of degree +n with factors |j| <= band.
std::vector<PBWWord> raising_level_span(std::int64_t n, std::int64_t band);

/// Quotient level -n under fixed truncation: lowering words, raising probes,
/// their Gram matrix, and a choice of lowering words forming a basis of the
/// quotient.
struct QuotientLevel {
  std::int64_t level = 0;
  TruncationParams params;
  std::vector<PBWWord> lowering;
  std::vector<PBWWord> raising;
  Matrix gram;                       // gram(u, w) = <raising[u], lowering[w]>
  std::vector<std::size_t> basis;    // indices into `lowering`
  std::size_t dim() const { return basis.size(); }
};

struct Claim1Polynomial {
  std::int64_t shift = 0;  // k in Psi(t1^{-1} t2^k P(t2)) v0 = 0
  Poly poly;               // a_0 + a_1 t2 + ... + a_n t2^n, a_n = 1
  std::size_t degree() const { return poly.size() - 1; }
};

/// Exact evaluator for one weight. Keeps a memo of word pairings and of
/// computed quotient levels; not safe to share across threads.
class HighestWeightEngine {
 public:
  explicit HighestWeightEngine(Weight weight);

  const Weight& weight() const { return weight_; }

  /// Coefficient of v0 in (w_1 w_2 ... w_r) v0 for any word of generators.
  Scalar vacuum_coefficient(std::span<const LatticeVector> word);

  /// Coefficient of v0 in u w v0; degrees must cancel.
  Scalar act_raising_word(const PBWWord& u, const PBWWord& w);

  Matrix gram_matrix(std::int64_t n, const TruncationParams& params);
  const QuotientLevel& quotient_level(std::int64_t n, const TruncationParams& params);

  /// Pairings <u, word> against the raising probes of `level`.
  std::vector<Scalar> pairing_vector(const QuotientLevel& level, std::span<const LatticeVector> word);

  /// Coordinates of the image of a level vector (given by its pairing
  /// vector) in the quotient basis, or nullopt if the truncation cannot
  /// represent it.
  std::optional<std::vector<Scalar>> project(const QuotientLevel& level, const std::vector<Scalar>& pairing);

  DimensionReport quotient_level_dim(std::int64_t n, const TruncationParams& params);

  /// True iff D(-b1)^j D((-n+j) b1 + k b2) v0, 0 <= j < n, are independent in
  /// the irreducible quotient. Throws PreconditionError if psi(D(k b2)) = 0.
  bool lower_bound_witness(std::int64_t n, std::int64_t k);

 private:
  using Key = std::vector<std::int64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  Scalar evaluate(std::vector<LatticeVector> word);
  std::int64_t rank_at(std::int64_t n, const TruncationParams& params);

  Weight weight_;
  std::unordered_map<Key, Scalar, KeyHash> memo_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, QuotientLevel> levels_;
};

// Free-function forms used by the CLI and tests. Each builds a fresh engine.
Scalar act_raising_word(const Weight& psi, const PBWWord& u, const PBWWord& w);
Matrix gram_matrix(const Weight& psi, std::int64_t n, const TruncationParams& params);
DimensionReport quotient_level_dim(const Weight& psi, std::int64_t n, const TruncationParams& params);
bool lower_bound_witness(const Weight& psi, std::int64_t n, std::int64_t k);

/// Dimension of level +n of the lowest weight module, through the flip
/// D(m) -> D(-m) of the whole engine.
DimensionReport lowest_weight_mirror(const Weight& psi, std::int64_t n, const TruncationParams& params);

/// Symmetric window [-2 maxdeg, 2 maxdeg] searched for annihilating polynomials.
std::pair<std::int64_t, std::int64_t> claim1_window(std::size_t maxdeg);

/// Nonzero P with a_0 a_n != 0 such that sum_i a_i f_{k+i+s} = 0 for every
/// probed s, found as the minimal annihilator of the f-sequence.
std::optional<Claim1Polynomial> claim1_polynomial(const Weight& psi, std::size_t maxdeg);

/// deg(P^{3^{l+1}}) * dim V_{-l} = 3^{l+1} deg(P) dim V_{-l}.
std::int64_t claim2_bound_from(std::size_t degP, std::int64_t l, std::int64_t dim_level_l);

/// claim2_bound_from with dim V_{-l} computed by the engine; 0 for psi == 0
/// (the quotient is the trivial module, so every lower level vanishes).
std::int64_t claim2_bound(const Weight& psi, std::int64_t l, const Poly& P, const TruncationParams& params);

/// True iff f vanishes on [-radius, radius].
bool weight_vanishes(const Weight& psi, std::int64_t radius);

}  // namespace vlike
