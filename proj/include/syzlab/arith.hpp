#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace syz {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Twists and degrees. Kept machine-sized; every constructor that accepts
/// them bounds the magnitude by kMaxDegree so sums of a few never overflow.
using Degree = std::int64_t;
inline constexpr Degree kMaxDegree = Degree{1} << 40;

/// Combinatorial binomial: C(m,k) when m >= k >= 0, and 0 otherwise.
/// This is the convention for counting global sections.
BigInt binom_trunc(const BigInt& m, unsigned k);

/// Polynomial binomial m(m-1)...(m-k+1)/k!, defined for every integer m.
BigInt binom_poly(const BigInt& m, unsigned k);

/// h^q(O_{P^n}(d)). Throws std::out_of_range unless 0 <= q <= n, and
/// std::invalid_argument when n < 1.
BigInt line_cohom(int n, Degree d, int q);

/// chi(O_{P^n}(d)) = binom_poly(d+n, n).
BigInt line_euler(int n, Degree d);

BigInt lcm(const BigInt& a, const BigInt& b);

std::string to_string(const BigInt& v);
BigInt parse_bigint(const std::string& text);

}  // namespace syz
