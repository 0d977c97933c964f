#include "vlike/lattice.hpp"

#include <sstream>

namespace vlike {

ZBasis::ZBasis(LatticeVector b1, LatticeVector b2) : b1_(b1), b2_(b2) {
  if (!is_z_basis(b1, b2)) {
    throw PreconditionError("z_basis", "det(b1,b2) must be +1 or -1");
  }
}

LatticeVector ZBasis::coords(const LatticeVector& m) const {
  const auto eps = det();
  // eps = +-1, so dividing is multiplying.
  return {det2(m, b2_) * eps, det2(b1_, m) * eps};
}

AlgebraElement AlgebraElement::D(const LatticeVector& m, const Scalar& coef) {
  AlgebraElement x;
  x.add_d(m, coef);
  return x;
}

AlgebraElement AlgebraElement::c1(const Scalar& coef) {
  AlgebraElement x;
  x.c1_ = coef;
  return x;
}

AlgebraElement AlgebraElement::c2(const Scalar& coef) {
  AlgebraElement x;
  x.c2_ = coef;
  return x;
}

void AlgebraElement::add_d(const LatticeVector& m, const Scalar& coef) {
  if (m.is_zero() || vlike::is_zero(coef)) return;
  auto [it, inserted] = dpart_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (vlike::is_zero(it->second)) dpart_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, a] : o.dpart_) add_d(m, a);
  c1_ += o.c1_;
  c2_ += o.c2_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, a] : o.dpart_) add_d(m, -a);
  c1_ -= o.c1_;
  c2_ -= o.c2_;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  if (vlike::is_zero(s)) {
    *this = AlgebraElement();
    return *this;
  }
  for (auto& [m, a] : dpart_) a *= s;
  c1_ *= s;
  c2_ *= s;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto term = [&](const Scalar& a, const std::string& name) {
    if (!first) out << " + ";
    first = false;
    out << a.get_str() << "*" << name;
  };
  for (const auto& [m, a] : dpart_) {
    term(a, "D(" + std::to_string(m.x1) + "," + std::to_string(m.x2) + ")");
  }
  if (!vlike::is_zero(c1_)) term(c1_, "c1");
  if (!vlike::is_zero(c2_)) term(c2_, "c2");
  return out.str();
}

AlgebraElement h_of(const LatticeVector& m) {
  return AlgebraElement::c1(Scalar(static_cast<long>(m.x1))) +
         AlgebraElement::c2(Scalar(static_cast<long>(m.x2)));
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [m, a] : x.dpart()) {
    for (const auto& [n, b] : y.dpart()) {
      const Scalar ab = a * b;
      const auto d = det2(m, n);
      if (d != 0) out.add_d(m + n, -Scalar(static_cast<long>(d)) * ab);
      if ((m + n).is_zero()) out += ab * h_of(m);
    }
  }
  return out;
}

AlgebraElement bracket_in_basis(const LatticeVector& mcoords, const LatticeVector& ncoords,
                                const ZBasis& basis) {
  if (!is_z_basis(basis.b1(), basis.b2())) {
    throw PreconditionError("z_basis", "bracket_in_basis needs det(b1,b2) = +-1");
  }
  const LatticeVector m = basis.expand(mcoords.x1, mcoords.x2);
  const LatticeVector n = basis.expand(ncoords.x1, ncoords.x2);
  AlgebraElement out;
  if (m.is_zero() || n.is_zero()) return out;
  const auto coef = -basis.det() * det2(mcoords, ncoords);
  out.add_d(m + n, Scalar(static_cast<long>(coef)));
  if ((m + n).is_zero()) out += h_of(m);
  return out;
}

std::optional<std::int64_t> z_degree(const AlgebraElement& x, const ZBasis& basis) {
  if (x.is_zero()) throw PreconditionError("nonzero", "z_degree of the zero element");
  std::optional<std::int64_t> degree;
  if (!is_zero(x.c1coef()) || !is_zero(x.c2coef())) degree = 0;
  for (const auto& [m, a] : x.dpart()) {
    const auto j = basis.coords(m).x1;
    if (degree && *degree != j) return std::nullopt;
    degree = j;
  }
  return degree;
}

}  // namespace vlike
