#include <doctest.h>

#include <random>

#include "vlike/lattice.hpp"

using namespace vlike;

namespace {

AlgebraElement random_element(std::mt19937& rng, int radius, int terms) {
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::uniform_int_distribution<int> coef(-4, 4);
  AlgebraElement x;
  for (int t = 0; t < terms; ++t) x.add_d({coord(rng), coord(rng)}, coef(rng));
  x += AlgebraElement::c1(coef(rng));
  x += AlgebraElement::c2(coef(rng));
  return x;
}

}  // namespace

TEST_CASE("scalar text round trip") {
  CHECK(to_pq(make_scalar(-6, 4)) == "-3/2");
  CHECK(to_pq(Scalar(5)) == "5/1");
  CHECK(parse_pq("10/4") == make_scalar(5, 2));
  CHECK(parse_pq("-7") == Scalar(-7));
  CHECK_THROWS_AS(parse_pq("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pq("x"), std::invalid_argument);
  for (int p = -9; p <= 9; ++p) {
    for (int q = 1; q <= 7; ++q) CHECK(parse_pq(to_pq(make_scalar(p, q))) == make_scalar(p, q));
  }
}

TEST_CASE("bracket on standard generators") {
  const auto r = bracket(AlgebraElement::D(kE1), AlgebraElement::D(kE2));
  CHECK(r == AlgebraElement::D({1, 1}, -1));
  CHECK(r.to_string() == "-1*D(1,1)");

  // m + n = 0: only the central part survives.
  const auto c = bracket(AlgebraElement::D({2, 3}), AlgebraElement::D({-2, -3}));
  CHECK(c == AlgebraElement::c1(2) + AlgebraElement::c2(3));

  CHECK(bracket(AlgebraElement::D({1, 2}), AlgebraElement::D({2, 4})).is_zero());
  CHECK(bracket(AlgebraElement::c1(), AlgebraElement::D({1, 0})).is_zero());
  CHECK(AlgebraElement::D({0, 0}).is_zero());
  CHECK(AlgebraElement().to_string() == "0");
}

TEST_CASE("antisymmetry and Jacobi on random elements") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = random_element(rng, 4, 3);
    const auto y = random_element(rng, 4, 3);
    const auto z = random_element(rng, 4, 2);
    CHECK(bracket(x, y) == -bracket(y, x));
    const auto jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("basis change agrees with direct brackets") {
  const std::vector<ZBasis> bases{ZBasis::standard(), ZBasis({0, 1}, {1, 0}), ZBasis({2, 1}, {1, 1}),
                                  ZBasis({1, 3}, {0, -1}), ZBasis({-3, 2}, {2, -1})};
  for (const auto& b : bases) {
    for (std::int64_t i = -2; i <= 2; ++i) {
      for (std::int64_t j = -2; j <= 2; ++j) {
        const LatticeVector mc{i, j};
        const LatticeVector nc{j - 1, 2 - i};
        const auto direct =
            bracket(AlgebraElement::D(b.expand(mc.x1, mc.x2)), AlgebraElement::D(b.expand(nc.x1, nc.x2)));
        CHECK(bracket_in_basis(mc, nc, b) == direct);
      }
    }
    CHECK(b.coords(b.expand(3, -5)) == LatticeVector{3, -5});
  }
  CHECK_THROWS_AS(ZBasis({2, 0}, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(ZBasis({1, 1}, {2, 2}), PreconditionError);
}

TEST_CASE("grading by b1-degree") {
  const ZBasis b({1, 1}, {0, 1});
  CHECK(z_degree(AlgebraElement::D(b.expand(3, 7)), b) == 3);
  CHECK(z_degree(AlgebraElement::c1() + AlgebraElement::D(b.expand(0, 2)), b) == 0);
  CHECK_FALSE(z_degree(AlgebraElement::D(b.expand(1, 0)) + AlgebraElement::D(b.expand(2, 0)), b).has_value());
  CHECK_THROWS_AS(z_degree(AlgebraElement(), b), PreconditionError);

  // [L_i, L_j] lands in L_{i+j}.
  for (std::int64_t i = -2; i <= 2; ++i) {
    for (std::int64_t j = -2; j <= 2; ++j) {
      const auto r = bracket(AlgebraElement::D(b.expand(i, 1)), AlgebraElement::D(b.expand(j, 2)));
      if (!r.is_zero()) CHECK(z_degree(r, b) == i + j);
    }
  }
}
