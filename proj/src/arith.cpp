#include "syzlab/arith.hpp"

#include <stdexcept>

namespace syz {

namespace {

BigInt falling_over_factorial(const BigInt& m, unsigned k) {
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= m - j;
    den *= j + 1;
  }
  // exact: a product of k consecutive integers is divisible by k!
  return num / den;
}

}  // namespace

BigInt binom_trunc(const BigInt& m, unsigned k) {
  if (m < k) return 0;
  // symmetric form keeps the product short
  BigInt kk = k;
  if (m - kk < kk) {
    return falling_over_factorial(m, static_cast<unsigned>(m - kk));
  }
  return falling_over_factorial(m, k);
}

BigInt binom_poly(const BigInt& m, unsigned k) {
  return falling_over_factorial(m, k);
}

BigInt line_cohom(int n, Degree d, int q) {
  if (n < 1) throw std::invalid_argument("line_cohom: projective dimension must be >= 1");
  if (q < 0 || q > n) throw std::out_of_range("line_cohom: cohomological degree outside [0, n]");
  const auto un = static_cast<unsigned>(n);
  if (q == 0) return binom_trunc(BigInt(d) + n, un);
  if (q == n) return binom_trunc(BigInt(-d) - 1, un);
  return 0;
}

BigInt line_euler(int n, Degree d) {
  if (n < 1) throw std::invalid_argument("line_euler: projective dimension must be >= 1");
  return binom_poly(BigInt(d) + n, static_cast<unsigned>(n));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt r = a / g * b;
  return r < 0 ? BigInt(-r) : r;
}

std::string to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer literal: " + text);
    }
  }
  BigInt v(text.substr(start));
  return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace syz
