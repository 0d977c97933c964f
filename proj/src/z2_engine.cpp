#include "vlike/z2_engine.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

namespace vlike {

bool TensorModuleElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& c) { return vlike::is_zero(c); });
}

TensorModule::TensorModule(Weight psi, TruncationParams params) : engine_(std::move(psi)), params_(params) {
  params_.validate();
}

TensorModuleElement TensorModule::act(const LatticeVector& bcoords, const TensorModuleElement& elt) {
  const std::int64_t target = elt.level - bcoords.x1;
  const std::int64_t texp = elt.texp + bcoords.x2;
  if (bcoords.is_zero()) return {elt.level, std::vector<Scalar>(elt.coords.size(), Scalar(0)), elt.texp};
  if (target < 0) return {target, {}, texp};

  // Source basis words at the element's level.
  std::vector<std::vector<LatticeVector>> words;
  if (elt.level == 0) {
    words.push_back({});
  } else {
    const auto& src = engine_.quotient_level(elt.level, params_);
    for (auto idx : src.basis) words.push_back(src.lowering[idx].factors);
  }
  if (words.size() != elt.coords.size()) {
    throw PreconditionError("hwpart_valid", "coordinate count does not match the quotient basis");
  }

  auto prefixed = [&](const std::vector<LatticeVector>& w) {
    std::vector<LatticeVector> out{bcoords};
    out.insert(out.end(), w.begin(), w.end());
    return out;
  };

  if (target == 0) {
    Scalar value = 0;
    for (std::size_t b = 0; b < words.size(); ++b) {
      if (!is_zero(elt.coords[b])) value += elt.coords[b] * engine_.vacuum_coefficient(prefixed(words[b]));
    }
    return {0, {value}, texp};
  }

  const auto& dst = engine_.quotient_level(target, params_);
  std::vector<Scalar> pairing(dst.raising.size(), Scalar(0));
  for (std::size_t b = 0; b < words.size(); ++b) {
    if (is_zero(elt.coords[b])) continue;
    const auto pv = engine_.pairing_vector(dst, prefixed(words[b]));
    for (std::size_t r = 0; r < pv.size(); ++r) pairing[r] += elt.coords[b] * pv[r];
  }
  auto coords = engine_.project(dst, pairing);
  if (!coords) {
    throw PreconditionError("truncation_overflow", "image of the action is not represented at the current band");
  }
  return {target, std::move(*coords), texp};
}

TensorModuleElement TensorModule::act_center(const LatticeVector& bcoords, const TensorModuleElement& elt) const {
  const Scalar factor = Scalar(static_cast<long>(bcoords.x1)) * engine_.weight().psi_h1();
  TensorModuleElement out = elt;
  for (auto& c : out.coords) c *= factor;
  return out;
}

TensorModuleElement act_tensor(const LatticeVector& bcoords, const TensorModuleElement& elt, const Weight& psi,
                               const TruncationParams& params) {
  TensorModule module(psi, params);
  return module.act(bcoords, elt);
}

std::set<std::int64_t> reachable_texp_set(const Weight& psi, std::int64_t i, std::int64_t bound) {
  return reachable_exponents(psi.f, i, bound);
}

ReducibilityReport remark42_reducibility(const Weight& psi, std::int64_t window, std::size_t maxwordlength) {
  if (window < 1) throw PreconditionError("window_positive", "window must be >= 1");
  ReducibilityReport report;
  report.window = window;
  if (weight_vanishes(psi, window)) {
    report.trivial_module = true;
    return report;
  }

  const auto orbit = reachable_texp_set(psi, 1, window);
  const bool orbit_hits_even =
      std::any_of(orbit.begin(), orbit.end(), [](std::int64_t e) { return e % 2 == 0; });

  std::vector<LatticeVector> gens;
  for (std::int64_t i = -1; i <= 1; ++i) {
    for (std::int64_t j = -window; j <= window; ++j) {
      if (i != 0 || j != 0) gens.push_back({i, j});
    }
  }

  // u (v0 (x) t) = (u v0) (x) t^{1 + deg_b2 u}; a level-0 image is F(u) v0.
  HighestWeightEngine engine(psi);
  std::vector<LatticeVector> word;
  std::function<bool(std::size_t)> search = [&](std::size_t remaining) -> bool {
    if (remaining == 1) {
      LatticeVector sum{};
      for (const auto& f : word) sum = sum + f;
      for (std::int64_t e = -window; e <= window; ++e) {
        if (e % 2 != 0) continue;
        const LatticeVector last{-sum.x1, e - 1 - sum.x2};
        if (last.is_zero() || last.x1 < -1 || last.x1 > 1 || last.x2 < -window || last.x2 > window) continue;
        word.push_back(last);
        const bool hit = !is_zero(engine.vacuum_coefficient(word));
        if (hit) {
          report.witness = word;
          return true;
        }
        word.pop_back();
      }
      return false;
    }
    for (const auto& g : gens) {
      word.push_back(g);
      if (search(remaining - 1)) return true;
      word.pop_back();
    }
    return false;
  };
  for (std::size_t len = 1; len <= maxwordlength && !report.witness; ++len) {
    word.clear();
    search(len);
  }
  report.reducible = !orbit_hits_even && !report.witness;
  return report;
}

std::int64_t quotient_dim_z2(const Weight& psi, std::int64_t m, std::int64_t k, std::int64_t i, std::int64_t s,
                             const TruncationParams& params) {
  params.validate();
  if (s < 1) throw PreconditionError("period_positive", "quotient V(psi,i,s) needs s >= 1");
  const std::int64_t bound = std::max<std::int64_t>(12, 2 * s);
  const auto loop = is_irreducible_loop(psi.f, 0, bound);
  if (!loop.irreducible || loop.period != s) {
    throw PreconditionError("period_matches", "s must equal the period of the irreducible loop module W_i");
  }
  const std::int64_t n = -m;
  const std::int64_t shift = k - i;
  if (n < 0) return 0;
  if (n == 0) return shift % s == 0 ? 1 : 0;

  HighestWeightEngine engine(psi);
  const auto& level = engine.quotient_level(n, params);
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < level.lowering.size(); ++c) {
    std::int64_t a = 0;
    for (const auto& f : level.lowering[c].factors) a += f.x2;
    if ((shift - a) % s == 0) cols.push_back(c);
  }
  Matrix sub(level.gram.rows(), cols.size());
  for (std::size_t r = 0; r < sub.rows(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = level.gram(r, cols[c]);
  }
  return static_cast<std::int64_t>(rank(sub));
}

Matrix lemma45_system(std::int64_t n, const Scalar& psih) {
  if (n < 1) throw PreconditionError("n_positive", "independence system needs n >= 1");
  const auto rows = static_cast<std::size_t>(n + 3);
  Matrix sys(rows, static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n + 3; ++k) {
    for (std::int64_t j = 1; j <= n; ++j) {
      Scalar entry = (j - k) * (j - k);
      if (j == k) entry += psih;
      sys(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j - 1)) = entry;
    }
  }
  return sys;
}

Lemma45Report lemma45_independence(std::int64_t n, const Scalar& psih) {
  Lemma45Report report;
  report.rank = rank(lemma45_system(n, psih));
  if (is_zero(psih)) {
    report.trivial_module = true;
    return report;
  }
  report.independent = report.rank == static_cast<std::size_t>(n);
  return report;
}

namespace {

Matrix identity(std::size_t d) {
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Matrix combine(const Matrix& a, const Scalar& sa, const Matrix& b, const Scalar& sb) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = sa * a(i, j) + sb * b(i, j);
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return combine(mul(a, b), 1, mul(b, a), -1); }

Matrix operator_with_sign(const LatticeVector& m, const LatticeVector& n, const Sl2Rep& rep, const Scalar& a1,
                          const Scalar& a2, int sign) {
  const auto d = static_cast<std::size_t>(rep.dim);
  if (m.is_zero()) return Matrix(d, d);
  const Scalar m1(static_cast<long>(m.x1));
  const Scalar m2(static_cast<long>(m.x2));
  const Scalar scalar = m2 * (a1 + static_cast<long>(n.x1)) - m1 * (a2 + static_cast<long>(n.x2));
  Matrix out = combine(identity(d), scalar, rep.xminus, m2 * m2);
  out = combine(out, 1, rep.xplus, -m1 * m1);
  out = combine(out, 1, rep.h, Scalar(sign) * m1 * m2);
  return out;
}

bool bracket_holds(const LatticeVector& m, const LatticeVector& n, const LatticeVector& p, const Sl2Rep& rep,
                   const Scalar& a1, const Scalar& a2, int sign) {
  const auto d = static_cast<std::size_t>(rep.dim);
  // c1, c2 act as zero, so the delta term drops out.
  Matrix lhs = (m + n).is_zero() ? Matrix(d, d)
                                 : combine(operator_with_sign(m + n, p, rep, a1, a2, sign),
                                           Scalar(static_cast<long>(-det2(m, n))), Matrix(d, d), 0);
  Matrix rhs = combine(mul(operator_with_sign(m, p + n, rep, a1, a2, sign), operator_with_sign(n, p, rep, a1, a2, sign)),
                       1,
                       mul(operator_with_sign(n, p + m, rep, a1, a2, sign), operator_with_sign(m, p, rep, a1, a2, sign)),
                       -1);
  return lhs == rhs;
}

const std::array<std::pair<LatticeVector, LatticeVector>, 14> kSignProbes{{
    {{1, 0}, {0, 1}},
    {{0, 1}, {1, 0}},
    {{1, 1}, {-1, 0}},
    {{2, 1}, {1, -1}},
    {{1, 2}, {2, 1}},
    {{-1, 1}, {1, 1}},
    {{3, -1}, {-1, 2}},
    {{2, 2}, {1, -3}},
    {{1, -1}, {-2, 1}},
    {{0, 2}, {3, 0}},
    {{-2, -1}, {1, 3}},
    {{1, 3}, {2, -2}},
    {{1, 0}, {-1, 0}},
    {{2, -1}, {-2, 1}},
}};

// Incrementally maintained span in Q^dim, rows fully reduced.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}
  std::size_t size() const { return rows_.size(); }

  bool add(std::vector<Scalar> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (is_zero(c)) continue;
      for (std::size_t i = 0; i < dim_; ++i) v[i] -= c * rows_[r][i];
    }
    std::size_t p = 0;
    while (p < dim_ && is_zero(v[p])) ++p;
    if (p == dim_) return false;
    const Scalar inv = Scalar(1) / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      const Scalar c = row[p];
      if (is_zero(c)) continue;
      for (std::size_t i = 0; i < dim_; ++i) row[i] -= c * v[i];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Scalar> flatten(const Matrix& m) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  }
  return out;
}

const std::array<LatticeVector, 6> kLoopGenerators{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}};

}  // namespace

bool Sl2Rep::satisfies_chevalley() const {
  return commutator(h, xplus) == combine(xplus, 2, xplus, 0) &&
         commutator(h, xminus) == combine(xminus, -2, xminus, 0) && commutator(xplus, xminus) == h;
}

Sl2Rep sl2_irrep(std::int64_t d) {
  if (d < 1) throw PreconditionError("dim_positive", "sl2 irrep dimension must be >= 1");
  const auto n = static_cast<std::size_t>(d);
  const std::int64_t top = d - 1;
  Sl2Rep rep{d, Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    rep.h(k, k) = top - 2 * kk;
    if (k + 1 < n) rep.xminus(k + 1, k) = kk + 1;
    if (k > 0) rep.xplus(k - 1, k) = top - kk + 1;
  }
  return rep;
}

int resolve_sign(std::int64_t d) {
  const Sl2Rep rep = sl2_irrep(d);
  const Scalar a1 = make_scalar(1, 3);
  const Scalar a2 = make_scalar(-2, 7);
  const std::array<LatticeVector, 2> bases{{{0, 0}, {1, -1}}};
  std::vector<int> valid;
  for (int sign : {1, -1}) {
    bool ok = true;
    for (const auto& [m, n] : kSignProbes) {
      for (const auto& p : bases) ok = ok && bracket_holds(m, n, p, rep, a1, a2, sign);
    }
    if (ok) valid.push_back(sign);
  }
  if (valid.empty()) {
    throw SignResolutionError(SignResolutionError::Kind::NoValidSign, "no sign makes the loop action a representation");
  }
  if (valid.size() == 2) {
    if (d == 1) return 1;
    throw SignResolutionError(SignResolutionError::Kind::AmbiguousSign, "both signs pass; enlarge the probe set");
  }
  return valid.front();
}

LoopSl2Module make_loop_module(std::int64_t d, Scalar alpha1, Scalar alpha2) {
  return {sl2_irrep(d), std::move(alpha1), std::move(alpha2), resolve_sign(d)};
}

Matrix loop_operator(const LatticeVector& m, const LatticeVector& n, const LoopSl2Module& mod) {
  if (mod.sign != 1 && mod.sign != -1) throw PreconditionError("sign_resolved", "loop module sign is unresolved");
  return operator_with_sign(m, n, mod.rep, mod.alpha1, mod.alpha2, mod.sign);
}

std::pair<std::vector<Scalar>, LatticeVector> act_loop_sl2(const LatticeVector& m, const std::vector<Scalar>& v,
                                                           const LatticeVector& n, const LoopSl2Module& mod) {
  const Matrix op = loop_operator(m, n, mod);
  if (v.size() != op.cols()) throw PreconditionError("vector_dim", "vector length must equal dim V");
  std::vector<Scalar> out(op.rows(), Scalar(0));
  for (std::size_t i = 0; i < op.rows(); ++i) {
    for (std::size_t j = 0; j < op.cols(); ++j) out[i] += op(i, j) * v[j];
  }
  return {out, n + m};
}

bool loop_bracket_holds(const LatticeVector& m, const LatticeVector& n, const LatticeVector& p,
                        const LoopSl2Module& mod) {
  if (mod.sign != 1 && mod.sign != -1) throw PreconditionError("sign_resolved", "loop module sign is unresolved");
  return bracket_holds(m, n, p, mod.rep, mod.alpha1, mod.alpha2, mod.sign);
}

LoopVerdict loop_irreducibility_window(const LoopSl2Module& mod, std::int64_t window) {
  if (window < 0) throw PreconditionError("window_nonempty", "window must be >= 0");
  const auto d = static_cast<std::size_t>(mod.rep.dim);
  LoopVerdict verdict;
  verdict.window = window;

  std::vector<LatticeVector> cells;
  for (std::int64_t x = -window; x <= window; ++x) {
    for (std::int64_t y = -window; y <= window; ++y) cells.push_back({x, y});
  }
  auto norm = [](const LatticeVector& v) { return std::max(v.x1 < 0 ? -v.x1 : v.x1, v.x2 < 0 ? -v.x2 : v.x2); };
  std::stable_sort(cells.begin(), cells.end(),
                   [&](const LatticeVector& a, const LatticeVector& b) { return norm(a) < norm(b); });
  auto inside = [&](const LatticeVector& v) { return norm(v) <= window; };

  // A vector killed by every generator spans a one-dimensional submodule.
  for (const auto& p : cells) {
    Matrix stacked(kLoopGenerators.size() * d, d);
    for (std::size_t g = 0; g < kLoopGenerators.size(); ++g) {
      const Matrix op = loop_operator(kLoopGenerators[g], p, mod);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) stacked(g * d + i, j) = op(i, j);
      }
    }
    const auto ker = kernel(stacked);
    if (!ker.empty()) {
      verdict.witness = LoopWitness{p, ker.front(), "annihilated by every generator"};
      return verdict;
    }
  }

  for (const auto& p : cells) {
    std::map<LatticeVector, Span> spans;
    std::map<LatticeVector, std::vector<Matrix>> maps;
    for (const auto& q : cells) spans.emplace(q, Span(d * d));
    std::deque<std::pair<LatticeVector, Matrix>> work;
    spans.at(p).add(flatten(identity(d)));
    maps[p].push_back(identity(d));
    work.emplace_back(p, identity(d));
    while (!work.empty()) {
      auto [q, a] = std::move(work.front());
      work.pop_front();
      for (const auto& g : kLoopGenerators) {
        const LatticeVector next = q + g;
        if (!inside(next)) continue;
        Matrix b = mul(loop_operator(g, q, mod), a);
        if (spans.at(next).add(flatten(b))) {
          maps[next].push_back(b);
          work.emplace_back(next, std::move(b));
        }
      }
    }

    if (spans.at(p).size() < d * d) {
      verdict.witness = LoopWitness{p, {}, "return maps span " + std::to_string(spans.at(p).size()) + " < dim^2"};
      return verdict;
    }
    for (const auto& q : cells) {
      Span image(d);
      for (const auto& a : maps[q]) {
        for (std::size_t j = 0; j < d; ++j) {
          std::vector<Scalar> col(d);
          for (std::size_t i = 0; i < d; ++i) col[i] = a(i, j);
          image.add(std::move(col));
        }
      }
      if (image.size() < d) {
        std::vector<Scalar> v(d, Scalar(0));
        v[0] = 1;
        verdict.witness = LoopWitness{p, v, "does not reach degree (" + std::to_string(q.x1) + "," +
                                                std::to_string(q.x2) + ")"};
        return verdict;
      }
    }
  }
  verdict.irreducible = true;
  return verdict;
}

}  // namespace vlike
