#pragma once

// Exact rational scalars shared by every engine.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vlike {

using Scalar = mpq_class;
using Integer = mpz_class;

/// Thrown when an operation is called outside its documented domain. The
/// `precondition` name is what the CLI reports back to the caller.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string precondition, const std::string& what)
      : std::invalid_argument(what), precondition_(std::move(precondition)) {}
  const std::string& precondition() const noexcept { return precondition_; }

 private:
  std::string precondition_;
};

/// Serializes as "p/q" in lowest terms with q > 0 (integers keep "/1").
std::string to_pq(const Scalar& x);

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Scalar parse_pq(std::string_view text);

inline Scalar make_scalar(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

/// x^e for integer e; e < 0 requires x != 0.
Scalar pow_int(const Scalar& x, std::int64_t e);

}  // namespace vlike
