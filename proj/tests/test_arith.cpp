#include <doctest.h>

#include "oracles.hpp"
#include "syzlab/arith.hpp"

using namespace syz;

TEST_CASE("binom_trunc matches Pascal's triangle and truncates") {
  for (int m = -6; m <= 18; ++m) {
    for (unsigned k = 0; k <= 8; ++k) CHECK(binom_trunc(m, k) == oracle::pascal(m, k));
  }
  CHECK(binom_trunc(BigInt(200), 100) == oracle::pascal(200, 100));
}

TEST_CASE("binom_poly is the falling factorial over k!") {
  for (int m = -10; m <= 10; ++m) {
    for (unsigned k = 0; k <= 6; ++k) {
      BigRat p = 1;
      for (unsigned j = 0; j < k; ++j) p *= BigRat(m - static_cast<int>(j), static_cast<int>(j) + 1);
      CHECK(BigRat(binom_poly(m, k)) == p);
    }
  }
  CHECK(binom_poly(-1, 3) == -1);
  CHECK(binom_poly(2, 3) == 0);
}

TEST_CASE("line bundle cohomology counts monomials") {
  for (int n = 1; n <= 4; ++n) {
    for (Degree d = -9; d <= 6; ++d) {
      CHECK(line_cohom(n, d, 0) == oracle::count_monomials(n + 1, static_cast<int>(d)));
      CHECK(line_cohom(n, d, n) == oracle::count_monomials(n + 1, static_cast<int>(-d - n - 1)));
      for (int q = 1; q < n; ++q) CHECK(line_cohom(n, d, q) == 0);
      BigInt alt = 0;
      for (int q = 0; q <= n; ++q) alt += (q % 2 ? -1 : 1) * line_cohom(n, d, q);
      CHECK(alt == line_euler(n, d));
    }
  }
}

TEST_CASE("line_cohom rejects bad arguments") {
  CHECK_THROWS_AS(line_cohom(2, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(line_cohom(2, 0, -1), std::out_of_range);
  CHECK_THROWS_AS(line_cohom(0, 0, 0), std::invalid_argument);
}

TEST_CASE("big integers round-trip through text") {
  BigInt big = BigInt(1) << 200;
  CHECK(parse_bigint(to_string(big)) == big);
  CHECK(parse_bigint("-17") == -17);
  CHECK_THROWS(parse_bigint("12x"));
  CHECK_THROWS(parse_bigint(""));
  CHECK(lcm(4, 6) == 12);
}
