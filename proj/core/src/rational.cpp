#include "jetcoh/rational.hpp"

#include <stdexcept>

namespace jetcoh {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : text) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9'))) {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
  }
  Rational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) {
    if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

}  // namespace jetcoh
