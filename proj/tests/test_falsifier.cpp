#include <doctest.h>

#include "vlike/falsifier.hpp"

using namespace vlike;

namespace {

// Row l0 is A x^i + B x^{-i} for a root x of a^2 T^2 - (2a^2 + k^2) T + a^2;
// later rows come from eps f(l,i) = (a/k)(f(l-1,i+1) - f(l-1,i)).
FTable seeded_table(const ISCandidate& c, const Scalar& x, const Scalar& A, const Scalar& B, int rows, int cols) {
  FTable t{0, -2, {}};
  const std::int64_t ihi = t.i0 + cols + rows;
  std::vector<Scalar> row;
  for (std::int64_t i = t.i0; i < ihi; ++i) row.push_back(A * pow_int(x, i) + B * pow_int(x, -i));
  const Scalar step = Scalar(c.eps) * c.a / Scalar(static_cast<long>(c.k));
  for (int l = 0; l < rows; ++l) {
    t.values.emplace_back(row.begin(), row.begin() + cols);
    std::vector<Scalar> next;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(step * (row[i + 1] - row[i]));
    row = next;
  }
  return t;
}

}  // namespace

TEST_CASE("single step of the second-order stencil") {
  const Scalar x = make_scalar(5, 7);
  CHECK(recurrence_step_53(1, 1, 1, x) == 3 * x - 1);
  CHECK(recurrence_step_53(make_scalar(3, 2), 2, 0, 0) == 0);
  CHECK(recurrence_step_53(1, 0, 1, 4) == 7);
  CHECK(stencil_degenerate(0));
  CHECK_THROWS_AS(recurrence_step_53(0, 1, 1, 1), PreconditionError);
}

TEST_CASE("difference identities on a rational geometric profile") {
  // a = 3/2, k = 4: 4a^2 + k^2 = 25, so x = 9 and 1/9 are the roots.
  for (int eps : {1, -1}) {
    const ISCandidate c{make_scalar(3, 2), eps, 4};
    const Scalar a2 = c.a * c.a;
    CHECK(a2 * 81 - (2 * a2 + 16) * 9 + a2 == 0);
    const FTable t = seeded_table(c, 9, make_scalar(2, 5), -3, 5, 5);
    CHECK(check_51_52(c, t));
    CHECK(check_53(c, t));

    FTable bad = t;
    bad.at(2, 0) += 1;
    CHECK_FALSE(check_51_52(c, bad));
    CHECK_FALSE(check_53(c, bad));
  }
}

TEST_CASE("difference identities: trivial and degenerate tables") {
  const ISCandidate c{1, 1, 1};
  FTable zero{0, 0, std::vector<std::vector<Scalar>>(4, std::vector<Scalar>(4, Scalar(0)))};
  CHECK(check_51_52(c, zero));
  CHECK(check_53(c, zero));
  CHECK_THROWS_AS(check_51_52(ISCandidate{1, 1, 0}, zero), PreconditionError);
  CHECK_THROWS_AS(check_51_52(ISCandidate{0, 1, 1}, zero), PreconditionError);
  FTable ragged = zero;
  ragged.values[1].pop_back();
  CHECK_THROWS_AS(check_51_52(c, ragged), PreconditionError);
}

TEST_CASE("rows propagated with the other eps fail the first-order identities") {
  const ISCandidate c{make_scalar(3, 2), 1, 4};
  const FTable t = seeded_table(c, 9, 1, 0, 3, 4);
  CHECK_FALSE(check_51_52(ISCandidate{c.a, -1, c.k}, t));
}

TEST_CASE("trace sequence") {
  const auto t = trace_sequence(1, 1, 4);
  CHECK(t.t == std::vector<Scalar>{2, 3, 7, 18, 47});
  CHECK(trace_sequence(2, 2, 4).t == t.t);
  const auto u = trace_sequence(2, 1, 2);
  CHECK(u.t[1] == make_scalar(9, 4));
  CHECK(u.t[2] == make_scalar(49, 16));
  for (const Scalar& a : {Scalar(1), Scalar(2), make_scalar(1, 2), Scalar(-3), make_scalar(5, 3)}) {
    for (std::int64_t k : {1, 2, 3, -2}) {
      const auto s = trace_sequence(a, k, 8);
      CHECK(s.t[1] - 2 == Scalar(static_cast<long>(k * k)) / (a * a));
      CHECK(s.strictly_increasing_from(0));
      for (std::size_t l = 0; l <= 4; ++l) {
        for (std::size_t m = 0; m <= 4; ++m) {
          const std::size_t diff = l > m ? l - m : m - l;
          CHECK(s.t[l] * s.t[m] == s.t[l + m] + s.t[diff]);
        }
      }
    }
  }
  CHECK_THROWS_AS(trace_sequence(1, 0, 4), PreconditionError);
  CHECK_THROWS_AS(trace_sequence(1, 1, 1), PreconditionError);
}

TEST_CASE("certificate fails at l = 2 with residue k^4/a^2") {
  const auto c = falsify(1, 1, 5);
  CHECK(c.C == 1);
  CHECK(c.failure_l == 2);
  CHECK(c.residue == 1);
  const auto d = falsify(2, 1, 5);
  CHECK(d.C == 4);
  CHECK(d.residue == make_scalar(1, 4));
  for (const Scalar& a : {Scalar(1), Scalar(2), make_scalar(1, 2), Scalar(-3)}) {
    for (std::int64_t k : {1, 2, 3}) {
      const auto cert = falsify(a, k, 4);
      CHECK(cert.C == a * a);
      CHECK(cert.failure_l == 2);
      const Scalar k2(static_cast<long>(k * k));
      CHECK(cert.residue == k2 * k2 / (a * a));
    }
  }
}
