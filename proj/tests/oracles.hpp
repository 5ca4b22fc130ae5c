// Reference computations used by the tests. Each one is derived
// independently of the library code it is compared against.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "syzlab/arith.hpp"
#include "syzlab/cohom_dim.hpp"
#include "syzlab/resolution.hpp"

namespace oracle {

using syz::BigInt;
using syz::Degree;

// Pascal's triangle, no closed forms.
inline BigInt pascal(long long m, long long k) {
  if (m < 0 || k < 0 || k > m) return 0;
  std::vector<BigInt> row{1};
  for (long long r = 1; r <= m; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1, 1);
    for (long long j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Number of monomials of degree d in n+1 variables, by direct enumeration.
inline long long count_monomials(int vars, int d) {
  if (d < 0) return 0;
  if (vars == 1) return 1;
  long long total = 0;
  for (int e = 0; e <= d; ++e) total += count_monomials(vars - 1, d - e);
  return total;
}

// h^q(Omega^p(k)) on P^n.
inline BigInt bott(int n, int p, Degree k, int q) {
  if (q == 0) {
    if (p == 0) return k >= 0 ? pascal(k + n, n) : BigInt(0);
    if (k <= p) return 0;
    return pascal(k + n - p, k) * pascal(k - 1, p);
  }
  if (q == n) return bott(n, n - p, -k, 0);
  return (q == p && k == 0) ? BigInt(1) : BigInt(0);
}

// Herzog-Kuhl moment equations: sum_i (-1)^i b_i d_i^k = 0 for k = 0..n.
inline bool moments_vanish(const syz::PureResolution& r) {
  const int n = r.n();
  for (int k = 0; k <= n; ++k) {
    BigInt s = 0;
    for (std::size_t i = 0; i < r.degrees().size(); ++i) {
      BigInt p = 1;
      for (int e = 0; e < k; ++e) p *= r.d(i);
      s += (i % 2 ? -1 : 1) * r.beta(i) * p;
    }
    if (s != 0) return false;
  }
  return true;
}

// Feasible range of each entry of 0 -> V_0 -> ... -> V_{m-1} -> 0 by enumerating
// rank vectors r_0..r_{m-2} with r_j <= cap. An entry whose range reaches
// cap + cap is reported as unbounded.
struct Range {
  bool feasible = false;
  std::vector<long long> lo, hi;
};

inline Range enumerate(const std::vector<syz::CohomDim>& chain, long long cap) {
  const std::size_t m = chain.size();
  Range out;
  out.lo.assign(m, INT64_MAX);
  out.hi.assign(m, -1);
  std::vector<long long> r(m + 1, 0);
  auto fits = [&](std::size_t j, long long v) { return chain[j].contains(BigInt(v)); };
  // r[j] is the rank entering V_j, r[j+1] leaving it; r[0] = r[m] = 0
  auto dfs = [&](auto&& self, std::size_t j) -> void {
    if (j == m) {
      out.feasible = true;
      for (std::size_t k = 0; k < m; ++k) {
        const long long v = r[k] + r[k + 1];
        out.lo[k] = std::min(out.lo[k], v);
        out.hi[k] = std::max(out.hi[k], v);
      }
      return;
    }
    const long long top = j + 1 == m ? 0 : cap;
    for (long long x = 0; x <= top; ++x) {
      if (!fits(j, r[j] + x)) continue;
      r[j + 1] = x;
      self(self, j + 1);
    }
    r[j + 1] = 0;
  };
  dfs(dfs, 0);
  return out;
}

// Strictly increasing degree sequences with d_0 = 0, d_{n+1} <= max_top, and their primitive Betti vectors.
inline std::vector<syz::PureResolution> corpus(std::size_t count, std::uint64_t seed, Degree max_top = 15) {
  std::mt19937_64 rng(seed);
  std::vector<syz::PureResolution> out;
  while (out.size() < count) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const Degree top = std::uniform_int_distribution<Degree>(n + 1, max_top)(rng);
    std::vector<Degree> pool;
    for (Degree x = 1; x < top; ++x) pool.push_back(x);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Degree> d(pool.begin(), pool.begin() + n);
    std::sort(d.begin(), d.end());
    d.insert(d.begin(), 0);
    d.push_back(top);
    syz::DegreeSequence seq(n, d);
    out.emplace_back(seq, syz::hk_betti(seq));
  }
  return out;
}

// An exact chain of total dimension <= max_total (length 3(n+1), n = 1..3)
// with up to max_hidden entries replaced by intervals or unknowns.
inline std::vector<syz::CohomDim> random_chain(std::mt19937_64& rng, int max_total, int max_hidden) {
  const int n = std::uniform_int_distribution<int>(1, 3)(rng);
  const std::size_t m = 3 * static_cast<std::size_t>(n + 1);
  std::vector<long long> r(m + 1, 0);
  int budget = max_total / 2;  // total dimension is twice the sum of ranks
  std::vector<std::size_t> inner;
  for (std::size_t j = 1; j < m; ++j) inner.push_back(j);
  std::shuffle(inner.begin(), inner.end(), rng);
  for (std::size_t j : inner) {
    if (budget == 0) break;
    const int x = std::uniform_int_distribution<int>(0, std::min(budget, 4))(rng);
    r[j] = x;
    budget -= x;
  }
  std::vector<syz::CohomDim> chain;
  for (std::size_t j = 0; j < m; ++j) chain.push_back(syz::CohomDim::known(r[j] + r[j + 1]));
  const int hidden = std::uniform_int_distribution<int>(0, max_hidden)(rng);
  for (int h = 0; h < hidden; ++h) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    const long long v = r[j] + r[j + 1];
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: chain[j] = syz::CohomDim::unknown(); break;
      case 1: chain[j] = syz::CohomDim::at_least(std::uniform_int_distribution<long long>(0, v)(rng)); break;
      default: {
        const long long lo = std::uniform_int_distribution<long long>(0, v)(rng);
        const long long hi = v + std::uniform_int_distribution<long long>(0, 3)(rng);
        chain[j] = syz::CohomDim::interval(lo, hi);
      }
    }
  }
  return chain;
}

// A chain with no exact realization: either every entry Known with a nonzero
// alternating sum, or one entry larger than its two Known neighbours together.
inline std::vector<syz::CohomDim> corrupted_chain(std::mt19937_64& rng) {
  auto chain = random_chain(rng, 20, 0);
  const std::size_t m = chain.size();
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    chain[j] = syz::CohomDim::known(chain[j].value() + 1);
    return chain;
  }
  const std::size_t j = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
  BigInt around = 0;
  if (j > 0) around += chain[j - 1].value();
  if (j + 1 < m) around += chain[j + 1].value();
  chain[j] = syz::CohomDim::known(around + 1);
  // hide some entries not adjacent to j
  for (std::size_t k = 0; k < m; ++k) {
    if (k + 1 < j || k > j + 1) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) chain[k] = syz::CohomDim::unknown();
    }
  }
  return chain;
}

// Compares the solver's output with the enumeration; returns an empty string on agreement.
inline std::string compare_projection(const std::vector<syz::CohomDim>& solved, const Range& exact, long long cap) {
  for (std::size_t j = 0; j < solved.size(); ++j) {
    const auto& s = solved[j];
    if (s.lo() != exact.lo[j]) return "lower bound differs at " + std::to_string(j);
    if (s.bounded()) {
      if (s.hi() != exact.hi[j]) return "upper bound differs at " + std::to_string(j);
    } else if (exact.hi[j] < cap) {
      return "solver unbounded but enumeration bounded at " + std::to_string(j);
    }
  }
  return {};
}

inline constexpr std::uint64_t kCorpusSeed = 20240611;

}  // namespace oracle
