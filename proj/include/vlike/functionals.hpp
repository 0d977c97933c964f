#pragma once

// Weight functionals psi on L_0 = <D(k b2)> + <c1, c2>, with psi(h(b2)) = 0.
//
// Everything downstream reads psi through its f-sequence
//   f_k = k psi(D(k b2))  (k != 0),   f_0 = -det(b1,b2) psi(h(b1)),
// so an exp-polynomial psi and an arbitrary injected sequence share one path.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "vlike/scalar.hpp"

namespace vlike {

/// A sequence k -> f_k defined on all of Z.
class FSequence {
 public:
  FSequence() : eval_([](std::int64_t) { return Scalar(0); }) {}
  explicit FSequence(std::function<Scalar(std::int64_t)> eval) : eval_(std::move(eval)) {}
  Scalar operator()(std::int64_t k) const { return eval_(k); }

 private:
  std::function<Scalar(std::int64_t)> eval_;
};

/// One summand p(k) alpha^k with p given by ascending coefficients.
struct ExpPolyTerm {
  Scalar alpha;
  std::vector<Scalar> coeffs;
};

class ExpPolyFunctional {
 public:
  /// Zero functional.
  explicit ExpPolyFunctional(int basisdet = 1);
  /// Trailing zero coefficients are trimmed and all-zero terms dropped.
  /// Throws PreconditionError on alpha == 0, repeated alpha, or basisdet not +-1.
  ExpPolyFunctional(std::vector<ExpPolyTerm> terms, int basisdet);

  const std::vector<ExpPolyTerm>& terms() const { return terms_; }
  int basisdet() const { return basisdet_; }
  bool is_zero() const { return terms_.empty(); }

  /// sum_j p_j(k) alpha_j^k, valid for every k including 0.
  Scalar closed_form(std::int64_t k) const;

  /// The mirrored functional psi o theta for theta(D(m)) = D(-m); its
  /// f-sequence is k -> -f_{-k}.
  ExpPolyFunctional flipped() const;

 private:
  std::vector<ExpPolyTerm> terms_;
  int basisdet_ = 1;
};

/// psi(D(k b2)) = (sum_j p_j(k) alpha_j^k) / k. k == 0 is rejected.
Scalar eval_psi_D(const ExpPolyFunctional& psi, std::int64_t k);

/// (psi(h(b1)), psi(h(b2))); the second entry is always 0.
std::pair<Scalar, Scalar> eval_psi_h(const ExpPolyFunctional& psi);

FSequence f_sequence(const ExpPolyFunctional& psi);

/// a_0 f_k + ... + a_n f_{k+n} = 0, stored as coeffs a_0..a_n with a_0 a_n != 0.
class LinearRecurrence {
 public:
  explicit LinearRecurrence(std::vector<Scalar> coeffs);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  bool annihilates(const FSequence& f, std::int64_t lo, std::int64_t hi) const;
  bool operator==(const LinearRecurrence&) const = default;

 private:
  std::vector<Scalar> coeffs_;
};

/// prod_j (E - alpha_j)^{s_j + 1} in the shift operator E.
LinearRecurrence char_recurrence(const ExpPolyFunctional& psi);

struct RecurrenceDetection {
  std::optional<LinearRecurrence> recurrence;
  bool identically_zero = false;
};

/// Minimal-order annihilator of f on [lo, hi] with a_0 a_n != 0, normalized
/// to a_n = 1. Requires hi - lo + 1 >= 2*maxorder + 1.
RecurrenceDetection detect_recurrence(const FSequence& f, std::size_t maxorder, std::int64_t lo,
                                      std::int64_t hi);

// Polynomials in one variable as ascending coefficient lists.
using Poly = std::vector<Scalar>;
Poly poly_mul(const Poly& a, const Poly& b);
/// True iff b divides a exactly (b nonzero).
bool poly_divides(const Poly& b, const Poly& a);
/// a^e
Poly poly_pow(const Poly& a, unsigned e);

}  // namespace vlike

namespace vlike {

/// psi(D(k b2)) recovered from the f-sequence; k != 0.
inline Scalar psi_D(const FSequence& f, std::int64_t k) {
  if (k == 0) throw PreconditionError("k_nonzero", "psi(D(0)) is undefined; D(0,0) = 0");
  return f(k) / Scalar(static_cast<long>(k));
}

}  // namespace vlike

namespace vlike {

/// The weight data the module engines consume: the f-sequence plus
/// det(b1,b2). psi(D(k b2)) = f_k / k and psi(h(b1)) = -det * f_0.
struct Weight {
  FSequence f;
  int basisdet = 1;

  Weight() = default;
  Weight(FSequence seq, int det) : f(std::move(seq)), basisdet(det) {}
  Weight(const ExpPolyFunctional& psi)  // NOLINT(google-explicit-constructor)
      : f(f_sequence(psi)), basisdet(psi.basisdet()) {}

  Scalar psi_h1() const { return Scalar(-basisdet) * f(0); }

  /// Weight pulled back along D(m) -> D(-m): f'_k = -f_{-k}.
  Weight flipped() const {
    FSequence g = f;
    return {FSequence([g](std::int64_t k) { return Scalar(-g(-k)); }), basisdet};
  }
};

}  // namespace vlike
