#include "vlike/falsifier.hpp"

namespace vlike {

void ISCandidate::validate() const {
  if (is_zero(a)) throw PreconditionError("a_nonzero", "D(b1) must act nondegenerately");
  if (eps != 1 && eps != -1) throw PreconditionError("eps_unit", "eps must be +-1");
}

Scalar recurrence_step_53(const Scalar& a, std::int64_t k, const Scalar& fprev, const Scalar& fcur) {
  if (is_zero(a)) throw PreconditionError("a_nonzero", "a must be nonzero");
  const Scalar a2 = a * a;
  const Scalar mid = 2 * a2 + Scalar(static_cast<long>(k * k));
  return (mid * fcur - a2 * fprev) / a2;
}

const Scalar& FTable::at(std::int64_t l, std::int64_t i) const {
  return values.at(static_cast<std::size_t>(l - l0)).at(static_cast<std::size_t>(i - i0));
}

Scalar& FTable::at(std::int64_t l, std::int64_t i) {
  return values.at(static_cast<std::size_t>(l - l0)).at(static_cast<std::size_t>(i - i0));
}

namespace {

void check_table(const ISCandidate& c, const FTable& f) {
  c.validate();
  if (stencil_degenerate(c.k)) throw PreconditionError("k_nonzero", "difference identities need k != 0");
  for (const auto& row : f.values) {
    if (static_cast<std::int64_t>(row.size()) != f.cols()) {
      throw PreconditionError("window_rectangular", "table rows must have equal length");
    }
  }
}

}  // namespace

bool check_51_52(const ISCandidate& c, const FTable& f) {
  check_table(c, f);
  const Scalar ak = c.a / Scalar(static_cast<long>(c.k));
  const Scalar eps(c.eps);
  const std::int64_t lhi = f.l0 + f.rows();
  const std::int64_t ihi = f.i0 + f.cols();
  for (std::int64_t l = f.l0 + 1; l < lhi; ++l) {
    for (std::int64_t i = f.i0; i < ihi; ++i) {
      if (i + 1 < ihi && eps * f.at(l, i) != ak * (f.at(l - 1, i + 1) - f.at(l - 1, i))) return false;
      if (i > f.i0 && eps * f.at(l - 1, i) != ak * (f.at(l, i) - f.at(l, i - 1))) return false;
    }
  }
  return true;
}

bool check_53(const ISCandidate& c, const FTable& f) {
  check_table(c, f);
  const std::int64_t ihi = f.i0 + f.cols();
  for (std::int64_t l = f.l0; l + 1 < f.l0 + f.rows(); ++l) {
    for (std::int64_t i = f.i0 + 1; i + 1 < ihi; ++i) {
      if (recurrence_step_53(c.a, c.k, f.at(l, i - 1), f.at(l, i)) != f.at(l, i + 1)) return false;
    }
  }
  return true;
}

bool TraceSequence::strictly_increasing_from(std::size_t l) const {
  for (std::size_t j = l; j + 1 < t.size(); ++j) {
    if (!(t[j] < t[j + 1])) return false;
  }
  return true;
}

TraceSequence trace_sequence(const Scalar& a, std::int64_t k, std::int64_t lmax) {
  if (is_zero(a)) throw PreconditionError("a_nonzero", "a must be nonzero");
  if (k == 0) throw PreconditionError("k_nonzero", "k = 0 is the degenerate stencil");
  if (lmax < 2) throw PreconditionError("lmax_at_least_2", "lmax must be >= 2");
  const Scalar a2 = a * a;
  TraceSequence seq{a, k, {Scalar(2), (2 * a2 + Scalar(static_cast<long>(k * k))) / a2}};
  for (std::int64_t l = 1; l < lmax; ++l) {
    const auto n = seq.t.size();
    seq.t.push_back(seq.t[1] * seq.t[n - 1] - seq.t[n - 2]);
  }
  return seq;
}

Certificate falsify(const Scalar& a, std::int64_t k, std::int64_t lmax) {
  const TraceSequence seq = trace_sequence(a, k, lmax);
  const Scalar k2(static_cast<long>(k * k));
  Certificate cert{a, k, k2 / (seq.t[1] - 2), std::nullopt, Scalar(0)};
  for (std::int64_t l = 2; l <= lmax; ++l) {
    const Scalar residue = cert.C * (seq.t[static_cast<std::size_t>(l)] - 2) - Scalar(static_cast<long>(l * l)) * k2;
    if (!is_zero(residue)) {
      cert.failure_l = l;
      cert.residue = residue;
      break;
    }
  }
  return cert;
}

}  // namespace vlike
