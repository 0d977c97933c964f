#pragma once

// The degree lattice Z^2, the Virasoro-like bracket on D(m), c1, c2, and the
// Z-grading attached to a choice of Z-basis.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "vlike/scalar.hpp"

namespace vlike {

struct LatticeVector {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;

  constexpr bool is_zero() const { return x1 == 0 && x2 == 0; }
  constexpr auto operator<=>(const LatticeVector&) const = default;
  constexpr LatticeVector operator+(const LatticeVector& o) const { return {x1 + o.x1, x2 + o.x2}; }
  constexpr LatticeVector operator-(const LatticeVector& o) const { return {x1 - o.x1, x2 - o.x2}; }
  constexpr LatticeVector operator-() const { return {-x1, -x2}; }
  constexpr LatticeVector operator*(std::int64_t k) const { return {k * x1, k * x2}; }
};

constexpr LatticeVector kE1{1, 0};
constexpr LatticeVector kE2{0, 1};

constexpr std::int64_t det2(const LatticeVector& m, const LatticeVector& n) {
  return m.x1 * n.x2 - m.x2 * n.x1;
}

constexpr bool is_z_basis(const LatticeVector& b1, const LatticeVector& b2) {
  auto d = det2(b1, b2);
  return d == 1 || d == -1;
}

/// A pair (b1, b2) with det = +-1. Construction rejects anything else.
class ZBasis {
 public:
  ZBasis() = default;
  ZBasis(LatticeVector b1, LatticeVector b2);

  const LatticeVector& b1() const { return b1_; }
  const LatticeVector& b2() const { return b2_; }
  std::int64_t det() const { return det2(b1_, b2_); }

  /// m1*b1 + m2*b2
  LatticeVector expand(std::int64_t m1, std::int64_t m2) const { return b1_ * m1 + b2_ * m2; }
  /// Inverse of expand: the (b1, b2)-coordinates of m.
  LatticeVector coords(const LatticeVector& m) const;

  static ZBasis standard() { return {kE1, kE2}; }

 private:
  LatticeVector b1_ = kE1;
  LatticeVector b2_ = kE2;
};

/// Finite sum  sum_m a_m D(m) + c1coef*c1 + c2coef*c2. The D-part never holds
/// a zero coefficient or the key (0,0).
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement D(const LatticeVector& m, const Scalar& coef = 1);
  static AlgebraElement c1(const Scalar& coef = 1);
  static AlgebraElement c2(const Scalar& coef = 1);

  const std::map<LatticeVector, Scalar>& dpart() const { return dpart_; }
  const Scalar& c1coef() const { return c1_; }
  const Scalar& c2coef() const { return c2_; }

  bool is_zero() const { return dpart_.empty() && vlike::is_zero(c1_) && vlike::is_zero(c2_); }

  /// Adds coef*D(m); drops D(0,0) and cancelled terms.
  void add_d(const LatticeVector& m, const Scalar& coef);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const { return Scalar(-1) * *this; }
  bool operator==(const AlgebraElement& o) const = default;

  /// Human-readable form, e.g. "-1*D(1,1) + 2*c1". Zero prints as "0".
  std::string to_string() const;

 private:
  std::map<LatticeVector, Scalar> dpart_;
  Scalar c1_ = 0;
  Scalar c2_ = 0;
};

/// h(m) = m1*c1 + m2*c2
AlgebraElement h_of(const LatticeVector& m);

/// Bilinear extension of [D(m),D(n)] = -det(m,n) D(m+n) + delta_{m+n,0} h(m).
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// [D(m), D(n)] for m, n given in the coordinates of `basis`, evaluated with
/// the basis-change form -det(b1,b2) det(mcoords,ncoords) D(m+n) + delta h(m).
AlgebraElement bracket_in_basis(const LatticeVector& mcoords, const LatticeVector& ncoords,
                                const ZBasis& basis);

/// The b1-coordinate shared by every term of x, or nullopt when x mixes
/// degrees. Central terms live in degree 0. Throws PreconditionError on x == 0.
std::optional<std::int64_t> z_degree(const AlgebraElement& x, const ZBasis& basis);

}  // namespace vlike
