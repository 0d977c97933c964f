#include "vlike/scalar.hpp"

#include <cctype>

namespace vlike {

std::string to_pq(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view s) {
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos == s.size()) throw std::invalid_argument("empty integer in rational");
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("malformed rational: " + std::string(s));
    }
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Scalar parse_pq(std::string_view text) {
  auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
  }
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar pow_int(const Scalar& x, std::int64_t e) {
  if (e < 0) {
    if (is_zero(x)) throw std::domain_error("negative power of zero");
    return pow_int(Scalar(1) / x, -e);
  }
  Scalar result = 1;
  Scalar base = x;
  auto n = static_cast<std::uint64_t>(e);
  while (n != 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

}  // namespace vlike
