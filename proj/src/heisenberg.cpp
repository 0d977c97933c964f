#include "vlike/heisenberg.hpp"

#include <deque>
#include <numeric>

namespace vlike {

namespace {

void require_bound(std::int64_t bound) {
  if (bound < 1) throw PreconditionError("bound_positive", "Heisenberg bound K must be >= 1");
}

std::int64_t reachable_period(const std::set<std::int64_t>& reach, std::int64_t i) {
  std::int64_t g = 0;
  for (auto r : reach) g = std::gcd(g, r - i);
  return g;
}

}  // namespace

HeisenbergAction act_heisenberg(const FSequence& f, std::int64_t k, std::int64_t m) {
  return {psi_D(f, k), m + k};
}

std::int64_t support_gcd(const FSequence& f, std::int64_t bound) {
  require_bound(bound);
  std::int64_t g = 0;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (!is_zero(f(k)) || !is_zero(f(-k))) g = std::gcd(g, k);
  }
  return g;
}

std::set<std::int64_t> reachable_exponents(const FSequence& f, std::int64_t i, std::int64_t bound) {
  require_bound(bound);
  std::vector<std::int64_t> steps;
  for (std::int64_t k = -bound; k <= bound; ++k) {
    if (k != 0 && !is_zero(f(k))) steps.push_back(k);
  }
  const std::int64_t lo = i - 2 * bound;
  const std::int64_t hi = i + 2 * bound;
  std::set<std::int64_t> seen{i};
  std::deque<std::int64_t> queue{i};
  while (!queue.empty()) {
    const auto m = queue.front();
    queue.pop_front();
    for (auto k : steps) {
      const auto next = m + k;
      if (next < lo || next > hi || seen.contains(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  std::set<std::int64_t> out;
  for (auto m : seen) {
    if (m >= i - bound && m <= i + bound) out.insert(m);
  }
  return out;
}

LoopModuleReport is_irreducible_loop(const FSequence& f, std::int64_t i, std::int64_t bound) {
  LoopModuleReport report;
  report.bound = bound;
  const auto reach = reachable_exponents(f, i, bound);
  report.period = reachable_period(reach, i);
  if (report.period == 0) {
    report.irreducible = true;
  } else {
    std::set<std::int64_t> lattice;
    for (std::int64_t m = i - bound; m <= i + bound; ++m) {
      if ((m - i) % report.period == 0) lattice.insert(m);
    }
    report.irreducible = (lattice == reach);
  }
  report.stabilized = reachable_period(reachable_exponents(f, i, 2 * bound), i) == report.period;
  return report;
}

}  // namespace vlike
