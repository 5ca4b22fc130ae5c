#include "syzlab/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace syz {

DegreeSequence::DegreeSequence(int n, std::vector<Degree> degrees) : n_(n), d_(std::move(degrees)) {
  if (n_ < 2) throw InvalidResolution("projective dimension n must be at least 2");
  if (d_.size() != static_cast<std::size_t>(n_) + 2) {
    throw InvalidResolution("expected " + std::to_string(n_ + 2) + " degrees, got " +
                            std::to_string(d_.size()));
  }
  for (Degree d : d_) {
    if (d > kMaxDegree || d < -kMaxDegree) throw InvalidResolution("degree out of supported range");
  }
}

bool DegreeSequence::strictly_increasing() const {
  return std::adjacent_find(d_.begin(), d_.end(), [](Degree a, Degree b) { return a >= b; }) ==
         d_.end();
}

PureResolution::PureResolution(DegreeSequence degrees, BettiVector betti)
    : degrees_(std::move(degrees)), betti_(std::move(betti)) {
  if (betti_.size() != degrees_.size()) {
    throw InvalidResolution("betti vector has " + std::to_string(betti_.size()) + " entries, expected " +
                            std::to_string(degrees_.size()));
  }
}

PureResolution make_resolution(int n, std::vector<Degree> degrees, std::vector<BigInt> betti) {
  return PureResolution(DegreeSequence(n, std::move(degrees)), BettiVector(std::move(betti)));
}

std::string to_string(const SyzygyId& id) {
  return std::string(id.side == SyzygyId::Side::F ? "F_" : "G_") + std::to_string(id.index);
}

std::vector<BigInt> hilbert_defect(const PureResolution& res) {
  const int n = res.n();
  const auto un = static_cast<unsigned>(n);
  // values at t = 0..n determine a degree-n polynomial
  std::vector<BigInt> values(un + 1);
  for (unsigned t = 0; t <= un; ++t) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < res.degrees().size(); ++i) {
      BigInt term = res.beta(i) * binom_poly(BigInt(static_cast<Degree>(t) - res.d(i) + n), un);
      if (i % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    values[t] = acc;
  }
  // Newton forward differences
  std::vector<BigInt> coeffs(un + 1);
  for (unsigned k = 0; k <= un; ++k) {
    coeffs[k] = values[0];
    for (unsigned j = 0; j + 1 < values.size(); ++j) values[j] = values[j + 1] - values[j];
    values.pop_back();
  }
  return coeffs;
}

ValidationReport validate(const PureResolution& res) {
  ValidationReport rep;
  const auto& deg = res.degrees();
  for (std::size_t i = 0; i + 1 < deg.size(); ++i) {
    if (deg[i] >= deg[i + 1]) {
      rep.degrees_increasing = false;
      std::ostringstream os;
      os << "degrees not strictly increasing at position " << i << ": " << deg[i] << " >= " << deg[i + 1];
      rep.problems.push_back(os.str());
    }
  }
  if (deg[0] != 0) rep.degrees_normalized = false;
  for (std::size_t i = 0; i < res.betti().size(); ++i) {
    if (res.beta(i) < 1) {
      rep.betti_positive = false;
      rep.problems.push_back("betti number b_" + std::to_string(i) + " = " + to_string(res.beta(i)) +
                             " is not positive");
    }
  }
  rep.defect = hilbert_defect(res);
  if (std::any_of(rep.defect.begin(), rep.defect.end(), [](const BigInt& c) { return c != 0; })) {
    rep.exact = false;
    std::ostringstream os;
    os << "nonzero Hilbert defect, coefficients in the binomial basis:";
    for (const auto& c : rep.defect) os << ' ' << c;
    rep.problems.push_back(os.str());
  }
  return rep;
}

void require_valid(const PureResolution& res) {
  auto rep = validate(res);
  if (!rep.ok()) throw InvalidResolution(rep.problems.front());
}

namespace {

// Rank of the (n+1) x (n+2) exactness system, by Gaussian elimination over Q.
std::size_t exactness_rank(const DegreeSequence& degrees) {
  const int n = degrees.n();
  const std::size_t cols = degrees.size();
  std::vector<std::vector<BigRat>> m(static_cast<std::size_t>(n) + 1, std::vector<BigRat>(cols));
  for (int t = 0; t <= n; ++t) {
    for (std::size_t i = 0; i < cols; ++i) {
      BigInt v = binom_poly(BigInt(t - degrees[i] + n), static_cast<unsigned>(n));
      m[static_cast<std::size_t>(t)][i] = BigRat(i % 2 == 0 ? v : BigInt(-v));
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      BigRat f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BettiVector hk_betti(const DegreeSequence& degrees) {
  if (!degrees.strictly_increasing()) throw InvalidResolution("hk_betti needs strictly increasing degrees");
  const std::size_t p = degrees.size();
  if (exactness_rank(degrees) != p - 1) {
    throw std::logic_error("exactness system does not have a one-dimensional solution space");
  }
  std::vector<BigInt> products(p, BigInt(1));
  BigInt common = 1;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (j == i) continue;
      Degree diff = degrees[j] - degrees[i];
      products[i] *= diff < 0 ? -diff : diff;
    }
    common = lcm(common, products[i]);
  }
  std::vector<BigInt> betti(p);
  for (std::size_t i = 0; i < p; ++i) betti[i] = common / products[i];
  BettiVector out(std::move(betti));
  PureResolution check(degrees, out);
  auto defect = hilbert_defect(check);
  if (std::any_of(defect.begin(), defect.end(), [](const BigInt& c) { return c != 0; })) {
    throw std::logic_error("hk_betti produced a vector with nonzero Hilbert defect");
  }
  return out;
}

PureResolution normalize(const PureResolution& res) {
  std::vector<Degree> shifted(res.degrees().values().begin(), res.degrees().values().end());
  const Degree d0 = shifted.front();
  for (auto& d : shifted) d -= d0;
  return PureResolution(DegreeSequence(res.n(), std::move(shifted)), res.betti());
}

PureResolution dualize(const PureResolution& res) {
  if (res.d(0) != 0) throw InvalidResolution("dualize expects a normalized resolution (d_0 = 0)");
  const std::size_t p = res.degrees().size();
  const Degree top = res.degrees().top();
  std::vector<Degree> d(p);
  std::vector<BigInt> b(p);
  for (std::size_t i = 0; i < p; ++i) {
    d[i] = top - res.d(p - 1 - i);
    b[i] = res.beta(p - 1 - i);
  }
  return make_resolution(res.n(), std::move(d), std::move(b));
}

std::vector<BettiInequality> betti_inequalities(const PureResolution& res) {
  const int n = res.n();
  std::vector<BettiInequality> out;
  auto add = [&](std::string name, int index, BigInt lhs, BigInt bound) {
    bool holds = lhs >= bound;
    out.push_back({std::move(name), index, std::move(lhs), std::move(bound), holds});
  };
  add("b_1 - b_0 >= n", 1, res.beta(1) - res.beta(0), BigInt(n));
  for (int i = 2; 2 * i <= n + 1; ++i) {
    add("b_i >= 2n - 2i + 3", i, res.beta(static_cast<std::size_t>(i)), BigInt(2 * n - 2 * i + 3));
  }
  for (int i = 2; i <= n - 1; ++i) {
    if (2 * i < n + 1) continue;
    add("b_i >= 2i + 1", i, res.beta(static_cast<std::size_t>(i)), BigInt(2 * i + 1));
  }
  add("b_n - b_{n+1} >= n", n, res.beta(static_cast<std::size_t>(n)) - res.beta(static_cast<std::size_t>(n) + 1),
      BigInt(n));
  return out;
}

RankC1 syzygy_rank_c1(const PureResolution& res, SyzygyId id) {
  const int n = res.n();
  if (id.index < 1 || id.index > n - 1) throw std::out_of_range("syzygy index outside [1, n-1]");
  const Degree top = res.degrees().top();
  // G_i = F_{n-i}^dual(-d_{n+1})
  const int fi = id.side == SyzygyId::Side::F ? id.index : n - id.index;
  RankC1 f{0, 0};
  for (int k = 0; k <= fi; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    BigInt r = res.beta(uk);
    BigInt c = res.beta(uk) * (res.d(uk) - top);
    if ((fi - k) % 2 == 0) {
      f.rank += r;
      f.c1 += c;
    } else {
      f.rank -= r;
      f.c1 -= c;
    }
  }
  if (f.rank <= 0) {
    throw InconsistentRank(to_string(id) + " has non-positive rank " + to_string(f.rank));
  }
  if (id.side == SyzygyId::Side::F) return f;
  return RankC1{f.rank, -f.c1 - f.rank * top};
}

}  // namespace syz
