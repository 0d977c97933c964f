#include "vlike/hw_engine.hpp"

#include <algorithm>
#include <functional>

namespace vlike {

std::int64_t PBWWord::degree() const {
  std::int64_t d = 0;
  for (const auto& f : factors) d += f.x1;
  return d;
}

bool PBWWord::is_lowering() const {
  return std::all_of(factors.begin(), factors.end(), [](const LatticeVector& f) { return f.x1 < 0; });
}

bool PBWWord::is_raising() const {
  return std::all_of(factors.begin(), factors.end(), [](const LatticeVector& f) { return f.x1 > 0; });
}

void TruncationParams::validate() const {
  if (band < 0) throw PreconditionError("band_nonnegative", "band M must be >= 0");
  if (raisingband < band) throw PreconditionError("raisingband_covers_band", "raising band M' must be >= M");
  if (maxlevel < 1) throw PreconditionError("maxlevel_positive", "maxlevel N must be >= 1");
}

TruncationParams TruncationParams::stepped() const {
  return {2 * band + 1, 2 * raisingband + 1, maxlevel};
}

namespace {

void enumerate_lowering(std::int64_t remaining, std::int64_t band, LatticeVector min_factor,
                        std::vector<LatticeVector>& current, std::vector<PBWWord>& out) {
  if (remaining == 0) {
    out.push_back({current});
    return;
  }
  for (std::int64_t i = -remaining; i <= -1; ++i) {
    for (std::int64_t j = -band; j <= band; ++j) {
      const LatticeVector f{i, j};
      if (f < min_factor) continue;
      current.push_back(f);
      enumerate_lowering(remaining + i, band, f, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<PBWWord> verma_level_span(std::int64_t n, std::int64_t band) {
  if (n < 1) throw PreconditionError("level_positive", "level n must be >= 1");
  if (band < 0) throw PreconditionError("band_nonnegative", "band M must be >= 0");
  std::vector<PBWWord> out;
  std::vector<LatticeVector> current;
  enumerate_lowering(n, band, LatticeVector{-n, -band}, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PBWWord> raising_level_span(std::int64_t n, std::int64_t band) {
  auto words = verma_level_span(n, band);
  for (auto& w : words) {
    for (auto& f : w.factors) f = -f;
    std::sort(w.factors.begin(), w.factors.end());
  }
  std::sort(words.begin(), words.end());
  return words;
}

std::size_t HighestWeightEngine::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = k.size();
  for (auto x : k) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

HighestWeightEngine::HighestWeightEngine(Weight weight) : weight_(std::move(weight)) {}

Scalar HighestWeightEngine::vacuum_coefficient(std::span<const LatticeVector> word) {
  std::vector<LatticeVector> w;
  for (const auto& f : word) {
    if (f.is_zero()) return Scalar(0);  // D(0,0) = 0
    w.push_back(f);
  }
  return evaluate(std::move(w));
}

Scalar HighestWeightEngine::evaluate(std::vector<LatticeVector> w) {
  if (w.empty()) return Scalar(1);

  std::int64_t total = 0;
  for (const auto& f : w) total += f.x1;
  if (total != 0 || w.front().x1 < 0 || w.back().x1 > 0) return Scalar(0);
  if (w.size() == 1) return psi_D(weight_.f, w.front().x2);

  Key key;
  key.reserve(2 * w.size());
  for (const auto& f : w) {
    key.push_back(f.x1);
    key.push_back(f.x2);
  }
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Scalar result = 0;
  // A proper suffix of b1-degree 0 maps v0 into level 0 = C v0.
  std::int64_t prefix = 0;
  std::size_t split = 0;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    prefix += w[p].x1;
    if (prefix == 0) {
      split = p + 1;
      break;
    }
  }
  if (split != 0) {
    std::vector<LatticeVector> head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<LatticeVector> tail(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
    const Scalar t = evaluate(std::move(tail));
    if (!is_zero(t)) result = evaluate(std::move(head)) * t;
  } else {
    // Move the rightmost non-lowering factor one step right:
    //   a b = b a + [a, b],  [a, b] = -eps det(a,b) D(a+b) + delta_{a+b,0} h(a).
    std::size_t p = w.size() - 1;
    while (w[p].x1 < 0) --p;
    const LatticeVector a = w[p];
    const LatticeVector b = w[p + 1];

    std::vector<LatticeVector> swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    result = evaluate(std::move(swapped));

    const LatticeVector sum = a + b;
    if (sum.is_zero()) {
      const Scalar h = Scalar(static_cast<long>(a.x1)) * weight_.psi_h1();
      if (!is_zero(h)) {
        std::vector<LatticeVector> shorter;
        for (std::size_t q = 0; q < w.size(); ++q) {
          if (q != p && q != p + 1) shorter.push_back(w[q]);
        }
        result += h * evaluate(std::move(shorter));
      }
    } else if (const auto d = det2(a, b); d != 0) {
      std::vector<LatticeVector> merged;
      for (std::size_t q = 0; q < w.size(); ++q) {
        if (q == p) {
          merged.push_back(sum);
        } else if (q != p + 1) {
          merged.push_back(w[q]);
        }
      }
      result += Scalar(static_cast<long>(-weight_.basisdet * d)) * evaluate(std::move(merged));
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

Scalar HighestWeightEngine::act_raising_word(const PBWWord& u, const PBWWord& w) {
  if (u.degree() + w.degree() != 0) {
    throw PreconditionError("degree_match", "raising word degree must cancel the lowering level");
  }
  std::vector<LatticeVector> word = u.factors;
  word.insert(word.end(), w.factors.begin(), w.factors.end());
  return vacuum_coefficient(word);
}

Matrix HighestWeightEngine::gram_matrix(std::int64_t n, const TruncationParams& params) {
  return quotient_level(n, params).gram;
}

const QuotientLevel& HighestWeightEngine::quotient_level(std::int64_t n, const TruncationParams& params) {
  params.validate();
  const auto key = std::make_tuple(n, params.band, params.raisingband);
  if (auto it = levels_.find(key); it != levels_.end()) return it->second;

  QuotientLevel q;
  q.level = n;
  q.params = params;
  q.lowering = verma_level_span(n, params.band);
  q.raising = raising_level_span(n, params.raisingband);
  q.gram = Matrix(q.raising.size(), q.lowering.size());
  for (std::size_t r = 0; r < q.raising.size(); ++r) {
    for (std::size_t c = 0; c < q.lowering.size(); ++c) q.gram(r, c) = act_raising_word(q.raising[r], q.lowering[c]);
  }
  q.basis = independent_columns(q.gram);
  return levels_.emplace(key, std::move(q)).first->second;
}

std::vector<Scalar> HighestWeightEngine::pairing_vector(const QuotientLevel& level,
                                                        std::span<const LatticeVector> word) {
  std::vector<Scalar> out;
  out.reserve(level.raising.size());
  for (const auto& u : level.raising) {
    std::vector<LatticeVector> full = u.factors;
    full.insert(full.end(), word.begin(), word.end());
    out.push_back(vacuum_coefficient(full));
  }
  return out;
}

std::optional<std::vector<Scalar>> HighestWeightEngine::project(const QuotientLevel& level,
                                                                const std::vector<Scalar>& pairing) {
  return solve_in_columns(level.gram, level.basis, pairing);
}

std::int64_t HighestWeightEngine::rank_at(std::int64_t n, const TruncationParams& params) {
  if (n == 0) return 1;
  return static_cast<std::int64_t>(rank(quotient_level(n, params).gram));
}

DimensionReport HighestWeightEngine::quotient_level_dim(std::int64_t n, const TruncationParams& params) {
  params.validate();
  if (n < 0) throw PreconditionError("level_nonnegative", "level n must be >= 0");
  DimensionReport report;
  report.level = n;
  report.band = params.band;
  report.raisingband = params.raisingband;
  if (n == 0) {
    report.dim = 1;
    report.stabilized = true;
    report.lowerbound = 1;
    report.upperbound = 1;
    return report;
  }

  report.dim = rank_at(n, params);
  report.stabilized = rank_at(n, params.stepped()) == report.dim;

  const std::int64_t probe = std::max<std::int64_t>(params.band + params.raisingband, 2);
  for (std::int64_t k = 1; k <= probe; ++k) {
    const std::int64_t chosen = !is_zero(weight_.f(k)) ? k : (!is_zero(weight_.f(-k)) ? -k : 0);
    if (chosen != 0) {
      if (lower_bound_witness(n, chosen)) report.lowerbound = n;
      break;
    }
  }

  if (rank_at(1, params) == 0) {
    report.upperbound = 0;
  } else if (auto p = claim1_polynomial(weight_, static_cast<std::size_t>(params.band + params.raisingband))) {
    report.upperbound = claim2_bound_from(p->degree(), n - 1, rank_at(n - 1, params));
  }
  return report;
}

bool HighestWeightEngine::lower_bound_witness(std::int64_t n, std::int64_t k) {
  if (n < 1) throw PreconditionError("level_positive", "level n must be >= 1");
  if (k == 0 || is_zero(weight_.f(k))) {
    throw PreconditionError("psi_D_kb2_nonzero", "lower_bound_witness needs psi(D(k b2)) != 0");
  }
  std::vector<std::vector<LatticeVector>> witnesses;
  for (std::int64_t j = 0; j < n; ++j) {
    std::vector<LatticeVector> w(static_cast<std::size_t>(j), LatticeVector{-1, 0});
    w.push_back({-n + j, k});
    witnesses.push_back(std::move(w));
  }
  const std::int64_t base = k < 0 ? -k : k;
  for (std::int64_t band = base; band <= base + 2; ++band) {
    const auto probes = raising_level_span(n, band);
    Matrix m(witnesses.size(), probes.size());
    for (std::size_t r = 0; r < witnesses.size(); ++r) {
      for (std::size_t c = 0; c < probes.size(); ++c) {
        std::vector<LatticeVector> full = probes[c].factors;
        full.insert(full.end(), witnesses[r].begin(), witnesses[r].end());
        m(r, c) = vacuum_coefficient(full);
      }
    }
    if (rank(m) == witnesses.size()) return true;
  }
  return false;
}

Scalar act_raising_word(const Weight& psi, const PBWWord& u, const PBWWord& w) {
  return HighestWeightEngine(psi).act_raising_word(u, w);
}

Matrix gram_matrix(const Weight& psi, std::int64_t n, const TruncationParams& params) {
  return HighestWeightEngine(psi).gram_matrix(n, params);
}

DimensionReport quotient_level_dim(const Weight& psi, std::int64_t n, const TruncationParams& params) {
  return HighestWeightEngine(psi).quotient_level_dim(n, params);
}

bool lower_bound_witness(const Weight& psi, std::int64_t n, std::int64_t k) {
  return HighestWeightEngine(psi).lower_bound_witness(n, k);
}

DimensionReport lowest_weight_mirror(const Weight& psi, std::int64_t n, const TruncationParams& params) {
  return HighestWeightEngine(psi.flipped()).quotient_level_dim(n, params);
}

std::pair<std::int64_t, std::int64_t> claim1_window(std::size_t maxdeg) {
  const auto r = static_cast<std::int64_t>(2 * maxdeg);
  return {-r, r};
}

std::optional<Claim1Polynomial> claim1_polynomial(const Weight& psi, std::size_t maxdeg) {
  if (maxdeg < 1) throw PreconditionError("maxdeg_positive", "claim1_polynomial needs maxdeg >= 1");
  const auto [lo, hi] = claim1_window(maxdeg);
  const auto found = detect_recurrence(psi.f, maxdeg, lo, hi);
  if (!found.recurrence) return std::nullopt;
  return Claim1Polynomial{0, found.recurrence->coeffs()};
}

std::int64_t claim2_bound_from(std::size_t degP, std::int64_t l, std::int64_t dim_level_l) {
  if (l < 0) throw PreconditionError("level_nonnegative", "level l must be >= 0");
  std::int64_t power = 1;
  for (std::int64_t i = 0; i <= l; ++i) power *= 3;
  return power * static_cast<std::int64_t>(degP) * dim_level_l;
}

std::int64_t claim2_bound(const Weight& psi, std::int64_t l, const Poly& P, const TruncationParams& params) {
  if (P.size() < 2) throw PreconditionError("claim1_polynomial", "claim2_bound needs an annihilating polynomial of degree >= 1");
  HighestWeightEngine engine(psi);
  if (engine.quotient_level_dim(1, params).dim == 0) return 0;
  return claim2_bound_from(P.size() - 1, l, engine.quotient_level_dim(l, params).dim);
}

bool weight_vanishes(const Weight& psi, std::int64_t radius) {
  for (std::int64_t k = -radius; k <= radius; ++k) {
    if (!is_zero(psi.f(k))) return false;
  }
  return true;
}

}  // namespace vlike
