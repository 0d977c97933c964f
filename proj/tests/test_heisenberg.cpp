#include <doctest.h>

#include "fixtures.hpp"
#include "vlike/heisenberg.hpp"

using namespace vlike;

TEST_CASE("Heisenberg action") {
  const auto f = f_sequence(fixtures::parity());
  const auto a = act_heisenberg(f, 2, 5);
  CHECK(a.coef == 1);
  CHECK(a.exponent == 7);
  CHECK(act_heisenberg(f, 1, 0).coef == 0);
  CHECK(act_center(4).coef == 0);
  CHECK(act_center(4).exponent == 4);
}

TEST_CASE("periods of the standard functionals") {
  for (std::int64_t bound : {10, 20, 40}) {
    const auto r = is_irreducible_loop(f_sequence(fixtures::parity()), 0, bound);
    CHECK(r.period == 2);
    CHECK(r.irreducible);
    CHECK(r.stabilized);
  }
  const auto one = is_irreducible_loop(f_sequence(fixtures::one()), 3, 10);
  CHECK(one.period == 1);
  CHECK(one.irreducible);

  const auto z = is_irreducible_loop(f_sequence(fixtures::zero()), 0, 10);
  CHECK(z.period == 0);
  CHECK(support_gcd(f_sequence(fixtures::zero()), 10) == 0);
  CHECK_THROWS_AS(support_gcd(f_sequence(fixtures::one()), 0), PreconditionError);
}

TEST_CASE("reachable set is a coset for symmetric supports") {
  // f_k != 0 exactly when 3 | k.
  const FSequence f([](std::int64_t k) { return Scalar(k % 3 == 0 ? 1 : 0); });
  const auto reach = reachable_exponents(f, 1, 9);
  for (std::int64_t e = -8; e <= 10; ++e) CHECK(static_cast<bool>(reach.count(e)) == ((e - 1) % 3 == 0));
  CHECK(support_gcd(f, 9) == 3);
}

TEST_CASE("one-sided support breaks irreducibility") {
  // D(k b2) acts only for k > 0, so t^i never reaches lower exponents.
  const FSequence f([](std::int64_t k) { return Scalar(k > 0 ? 1 : 0); });
  const auto r = is_irreducible_loop(f, 0, 6);
  CHECK_FALSE(r.irreducible);
}
