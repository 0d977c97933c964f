#include <doctest.h>

#include "fixtures.hpp"
#include "vlike/hw_engine.hpp"

using namespace vlike;

namespace {

// Level-one pairing <D(b1 + a b2), D(-b1 + b b2)> = -det * f_{a+b}.
std::size_t hankel_rank(const FSequence& f, std::int64_t band, std::int64_t raisingband) {
  std::vector<std::vector<Scalar>> rows;
  for (std::int64_t a = -raisingband; a <= raisingband; ++a) {
    std::vector<Scalar> row;
    for (std::int64_t b = -band; b <= band; ++b) row.push_back(f(a + b));
    rows.push_back(row);
  }
  return fixtures::naive_rank(rows);
}

}  // namespace

TEST_CASE("PBW spans at low levels") {
  for (std::int64_t m = 0; m <= 3; ++m) {
    CHECK(verma_level_span(1, m).size() == static_cast<std::size_t>(2 * m + 1));
    CHECK(verma_level_span(2, m).size() == static_cast<std::size_t>((2 * m + 1) + (2 * m + 1) * (2 * m + 2) / 2));
    CHECK(raising_level_span(2, m).size() == verma_level_span(2, m).size());
  }
  for (const auto& w : verma_level_span(3, 1)) {
    CHECK(w.is_lowering());
    CHECK(w.degree() == -3);
    CHECK(std::is_sorted(w.factors.begin(), w.factors.end()));
  }
  for (const auto& w : raising_level_span(2, 1)) CHECK(w.is_raising());
}

TEST_CASE("vacuum coefficients against hand contractions") {
  for (int det : {1, -1}) {
    for (const auto& psi : {fixtures::parity(det), fixtures::one(det)}) {
      HighestWeightEngine engine{Weight(psi)};
      const auto f = f_sequence(psi);
      const Scalar eps(det);
      for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
          const std::vector<LatticeVector> w{{1, a}, {-1, b}};
          CHECK(engine.vacuum_coefficient(w) == -eps * f(a + b));
        }
      }
      // D(b1) D(k b2) D(-b1 - k b2) v0 = (k f_0 - eps f_k f_{-k} / k) v0
      for (std::int64_t k = 1; k <= 3; ++k) {
        const std::vector<LatticeVector> w{{1, 0}, {0, k}, {-1, -k}};
        const Scalar kk(static_cast<long>(k));
        CHECK(engine.vacuum_coefficient(w) == kk * f(0) - eps * f(k) * f(-k) / kk);
      }
      // Lowering first or raising last annihilates.
      CHECK(engine.vacuum_coefficient(std::vector<LatticeVector>{{-1, 0}, {1, 0}}) == 0);
      CHECK(engine.vacuum_coefficient(std::vector<LatticeVector>{{0, 2}}) == f(2) / 2);
    }
  }
}

TEST_CASE("level one equals the Hankel rank") {
  for (const auto& psi : {fixtures::parity(), fixtures::one(), ExpPolyFunctional({{Scalar(2), {Scalar(3)}}}, 1),
                          ExpPolyFunctional({{Scalar(1), {Scalar(0), Scalar(1)}}, {Scalar(-2), {Scalar(1)}}}, -1)}) {
    for (std::int64_t m = 1; m <= 3; ++m) {
      const TruncationParams t{m, m, 1};
      const auto r = quotient_level_dim(Weight(psi), 1, t);
      CHECK(static_cast<std::size_t>(r.dim) == hankel_rank(f_sequence(psi), m, m));
    }
  }
  const auto r = quotient_level_dim(Weight(fixtures::parity()), 1, TruncationParams{});
  CHECK(r.dim == 2);
}

TEST_CASE("Gram entries are raising-word pairings") {
  const Weight w(fixtures::parity());
  HighestWeightEngine engine(w);
  const TruncationParams t{1, 1, 2};
  const auto& q = engine.quotient_level(2, t);
  for (std::size_t u = 0; u < q.raising.size(); ++u) {
    for (std::size_t c = 0; c < q.lowering.size(); ++c) {
      CHECK(q.gram(u, c) == engine.act_raising_word(q.raising[u], q.lowering[c]));
    }
  }
  CHECK_THROWS_AS(engine.act_raising_word(q.raising[0], verma_level_span(1, 1)[0]), PreconditionError);
}

TEST_CASE("dimension reports: stabilization, monotonicity, sandwich") {
  for (const auto& psi : {fixtures::parity(), fixtures::one()}) {
    HighestWeightEngine engine{Weight(psi)};
    for (std::int64_t n = 1; n <= 2; ++n) {
      const auto small = engine.quotient_level_dim(n, TruncationParams{1, 1, n});
      const auto big = engine.quotient_level_dim(n, TruncationParams{2, 2, n});
      CHECK(small.dim <= big.dim);
      CHECK(big.stabilized);
      CHECK(big.lowerbound <= big.dim);
      REQUIRE(big.upperbound.has_value());
      CHECK(big.dim <= *big.upperbound);
    }
  }
  const auto r42 = quotient_level_dim(Weight(fixtures::parity()), 2, TruncationParams{});
  CHECK(r42.dim == 7);
  CHECK(r42.lowerbound == 2);
  CHECK(r42.upperbound == 36);
}

TEST_CASE("level zero and the zero functional") {
  const auto top = quotient_level_dim(Weight(fixtures::one()), 0, TruncationParams{});
  CHECK(top.dim == 1);
  for (std::int64_t n = 1; n <= 3; ++n) {
    const auto r = quotient_level_dim(Weight(fixtures::zero()), n, TruncationParams{2, 2, 3});
    CHECK(r.dim == 0);
    CHECK(r.upperbound == 0);
  }
  CHECK(weight_vanishes(Weight(fixtures::zero()), 10));
  CHECK_FALSE(weight_vanishes(Weight(fixtures::parity()), 10));
}

TEST_CASE("lower bound witnesses") {
  for (std::int64_t n = 1; n <= 3; ++n) {
    CHECK(lower_bound_witness(Weight(fixtures::parity()), n, 2));
    CHECK(lower_bound_witness(Weight(fixtures::one()), n, 1));
  }
  CHECK_THROWS_AS(lower_bound_witness(Weight(fixtures::parity()), 2, 1), PreconditionError);
}

TEST_CASE("annihilating polynomial and level bound") {
  const auto p = claim1_polynomial(Weight(fixtures::parity()), 2);
  REQUIRE(p.has_value());
  CHECK(p->poly == Poly{-1, 0, 1});
  CHECK(p->degree() == 2);
  const auto q = claim1_polynomial(Weight(fixtures::one()), 2);
  REQUIRE(q.has_value());
  CHECK(q->poly == Poly{-1, 1});
  CHECK(claim2_bound_from(2, 0, 1) == 6);
  CHECK(claim2_bound_from(2, 1, 2) == 36);
  CHECK(claim2_bound(Weight(fixtures::zero()), 1, Poly{-1, 1}, TruncationParams{}) == 0);
  CHECK(claim1_window(3) == std::pair<std::int64_t, std::int64_t>{-6, 6});

  const Weight factorial(FSequence([](std::int64_t k) {
                           Scalar out = 1;
                           for (std::int64_t j = 2; j <= (k < 0 ? -k : k); ++j) out *= Scalar(static_cast<long>(j));
                           return out;
                         }),
                         1);
  CHECK_FALSE(claim1_polynomial(factorial, 4).has_value());
}

TEST_CASE("lowest weight mirror of an even functional") {
  // For f_{-k} = f_k the flip is f -> -f, and every level pairing is
  // homogeneous in f, so ranks agree.
  for (std::int64_t n = 1; n <= 2; ++n) {
    const TruncationParams t{1, 1, n};
    CHECK(lowest_weight_mirror(Weight(fixtures::parity()), n, t).dim ==
          quotient_level_dim(Weight(fixtures::parity()), n, t).dim);
  }
  CHECK(lowest_weight_mirror(Weight(fixtures::zero()), 1, TruncationParams{}).dim == 0);
}

TEST_CASE("truncation validation") {
  CHECK_THROWS_AS(TruncationParams({-1, 2, 2}).validate(), PreconditionError);
  CHECK_THROWS_AS(TruncationParams({2, 1, 2}).validate(), PreconditionError);
  const auto s = TruncationParams{2, 3, 2}.stepped();
  CHECK(s.band == 5);
  CHECK(s.raisingband == 7);
}
