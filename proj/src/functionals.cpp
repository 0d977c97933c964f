#include "vlike/functionals.hpp"

#include <algorithm>

#include "vlike/linalg.hpp"

namespace vlike {

namespace {

Scalar eval_poly(const std::vector<Scalar>& coeffs, std::int64_t k) {
  Scalar acc = 0;
  const Scalar x(static_cast<long>(k));
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

}  // namespace

ExpPolyFunctional::ExpPolyFunctional(int basisdet) : ExpPolyFunctional({}, basisdet) {}

ExpPolyFunctional::ExpPolyFunctional(std::vector<ExpPolyTerm> terms, int basisdet)
    : basisdet_(basisdet) {
  if (basisdet != 1 && basisdet != -1) {
    throw PreconditionError("basisdet", "basisdet must be +1 or -1");
  }
  for (auto& t : terms) {
    if (vlike::is_zero(t.alpha)) throw PreconditionError("alpha_nonzero", "exp-polynomial base alpha must be nonzero");
    trim(t.coeffs);
    if (t.coeffs.empty()) continue;
    for (const auto& u : terms_) {
      if (u.alpha == t.alpha) throw PreconditionError("alpha_distinct", "exp-polynomial bases must be distinct");
    }
    terms_.push_back(std::move(t));
  }
}

Scalar ExpPolyFunctional::closed_form(std::int64_t k) const {
  Scalar acc = 0;
  for (const auto& t : terms_) acc += eval_poly(t.coeffs, k) * pow_int(t.alpha, k);
  return acc;
}

ExpPolyFunctional ExpPolyFunctional::flipped() const {
  // -p(-k) alpha^{-k} = q(k) (1/alpha)^k with q_i = -(-1)^i p_i.
  std::vector<ExpPolyTerm> out;
  for (const auto& t : terms_) {
    ExpPolyTerm u{Scalar(1) / t.alpha, t.coeffs};
    for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
      if (i % 2 == 0) u.coeffs[i] = -u.coeffs[i];
    }
    out.push_back(std::move(u));
  }
  return ExpPolyFunctional(std::move(out), basisdet_);
}

Scalar eval_psi_D(const ExpPolyFunctional& psi, std::int64_t k) {
  if (k == 0) throw PreconditionError("k_nonzero", "eval_psi_D needs k != 0; use eval_psi_h");
  return psi.closed_form(k) / Scalar(static_cast<long>(k));
}

std::pair<Scalar, Scalar> eval_psi_h(const ExpPolyFunctional& psi) {
  Scalar sum0 = 0;
  for (const auto& t : psi.terms()) sum0 += t.coeffs.front();
  return {-psi.basisdet() * sum0, Scalar(0)};
}

FSequence f_sequence(const ExpPolyFunctional& psi) {
  return FSequence([psi](std::int64_t k) {
    if (k == 0) return Scalar(-psi.basisdet() * eval_psi_h(psi).first);
    return Scalar(Scalar(static_cast<long>(k)) * eval_psi_D(psi, k));
  });
}

LinearRecurrence::LinearRecurrence(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2 || is_zero(coeffs_.front()) || is_zero(coeffs_.back())) {
    throw PreconditionError("a0_an_nonzero", "recurrence needs order >= 1 and a_0 a_n != 0");
  }
}

bool LinearRecurrence::annihilates(const FSequence& f, std::int64_t lo, std::int64_t hi) const {
  const auto n = static_cast<std::int64_t>(order());
  for (std::int64_t k = lo; k + n <= hi; ++k) {
    Scalar acc = 0;
    for (std::int64_t i = 0; i <= n; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * f(k + i);
    if (!is_zero(acc)) return false;
  }
  return true;
}

LinearRecurrence char_recurrence(const ExpPolyFunctional& psi) {
  if (psi.is_zero()) throw PreconditionError("psi_nonzero", "char_recurrence of the zero functional");
  Poly p{Scalar(1)};
  for (const auto& t : psi.terms()) {
    p = poly_mul(p, poly_pow(Poly{-t.alpha, Scalar(1)}, static_cast<unsigned>(t.coeffs.size())));
  }
  return LinearRecurrence(std::move(p));
}

RecurrenceDetection detect_recurrence(const FSequence& f, std::size_t maxorder, std::int64_t lo,
                                      std::int64_t hi) {
  if (maxorder < 1 || hi - lo + 1 < static_cast<std::int64_t>(2 * maxorder + 1)) {
    throw PreconditionError("window_length", "window must hold at least 2*maxorder+1 values");
  }
  std::vector<Scalar> values;
  for (std::int64_t k = lo; k <= hi; ++k) values.push_back(f(k));

  RecurrenceDetection out;
  if (std::all_of(values.begin(), values.end(), [](const Scalar& x) { return is_zero(x); })) {
    out.identically_zero = true;
    return out;
  }

  for (std::size_t d = 1; d <= maxorder; ++d) {
    const std::size_t rows = values.size() - d;
    Matrix shift(rows, d + 1);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c <= d; ++c) shift(r, c) = values[r + c];
    }
    const auto basis = kernel(shift);
    if (basis.empty()) continue;

    // With a multi-dimensional kernel take sum_i t^i v_i for the first t that
    // makes both end coefficients nonzero; each end is a polynomial in t of
    // degree < dim, so 2*dim + 1 trials are enough when one exists.
    for (std::size_t t = 1; t <= 2 * basis.size() + 1; ++t) {
      std::vector<Scalar> v(d + 1, Scalar(0));
      Scalar weight = 1;
      for (const auto& b : basis) {
        for (std::size_t c = 0; c <= d; ++c) v[c] += weight * b[c];
        weight *= static_cast<unsigned long>(t);
      }
      if (is_zero(v.front()) || is_zero(v.back())) continue;
      const Scalar lead = v.back();
      for (auto& x : v) x /= lead;
      out.recurrence = LinearRecurrence(std::move(v));
      return out;
    }
  }
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_pow(const Poly& a, unsigned e) {
  Poly out{Scalar(1)};
  for (unsigned i = 0; i < e; ++i) out = poly_mul(out, a);
  return out;
}

bool poly_divides(const Poly& b_in, const Poly& a_in) {
  Poly b = b_in;
  Poly r = a_in;
  trim(b);
  trim(r);
  if (b.empty()) throw PreconditionError("divisor_nonzero", "division by the zero polynomial");
  while (r.size() >= b.size()) {
    const Scalar q = r.back() / b.back();
    const std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
    trim(r);
  }
  return r.empty();
}

}  // namespace vlike
