#include "syzlab/catalog.hpp"

#include <stdexcept>

namespace syz {

namespace {

BigInt c(long long m, long long k) {
  if (k < 0) return 0;
  return binom_trunc(BigInt(m), static_cast<unsigned>(k));
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

PureResolution koszul(int n) {
  require(n >= 2, "koszul: n must be at least 2");
  std::vector<Degree> d;
  std::vector<BigInt> b;
  for (int i = 0; i <= n + 1; ++i) {
    d.push_back(i);
    b.push_back(c(n + 1, i));
  }
  return make_resolution(n, std::move(d), std::move(b));
}

PureResolution compressed_gorenstein(int n, int t) {
  require(n >= 2, "compressed_gorenstein: n must be at least 2");
  require(t >= 1, "compressed_gorenstein: t must be at least 1");
  require(t <= 1000000, "compressed_gorenstein: t too large");
  std::vector<Degree> d{0};
  std::vector<BigInt> b{1};
  for (int i = 1; i <= n; ++i) {
    d.push_back(t + i);
    b.push_back(c(t + i - 1, i - 1) * c(t + n + 1, n + 1 - i) - c(t + n - i, n + 1 - i) * c(t + n, i - 1));
  }
  d.push_back(2 * Degree{t} + n + 1);
  b.push_back(1);
  return make_resolution(n, std::move(d), std::move(b));
}

PureResolution eagon_northcott(int n, int d, int a) {
  require(n >= 2, "eagon_northcott: n must be at least 2");
  require(d >= 1, "eagon_northcott: d must be at least 1");
  require(a >= 1, "eagon_northcott: a must be at least 1");
  require(d <= 1000000 && a <= 1000000, "eagon_northcott: parameters too large");
  std::vector<Degree> deg{0};
  std::vector<BigInt> b{1};
  for (int i = 1; i <= n + 1; ++i) {
    deg.push_back(Degree{d} * (a + i - 1));
    b.push_back(c(a + n, a + i - 1) * c(a + i - 2, i - 1));
  }
  return make_resolution(n, std::move(deg), std::move(b));
}

}  // namespace syz
