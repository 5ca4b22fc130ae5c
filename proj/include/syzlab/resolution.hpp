#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzlab/arith.hpp"

namespace syz {

class InvalidResolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degrees d_0, ..., d_{n+1} of a pure resolution on P^n.
class DegreeSequence {
 public:
  /// Throws InvalidResolution when n < 2, the length is not n+2, or a
  /// degree exceeds kMaxDegree in magnitude. Monotonicity is checked by
  /// validate(), not here, so malformed input can still be reported on.
  DegreeSequence(int n, std::vector<Degree> degrees);

  int n() const { return n_; }
  std::size_t size() const { return d_.size(); }
  Degree operator[](std::size_t i) const { return d_[i]; }
  Degree top() const { return d_.back(); }
  std::span<const Degree> values() const { return d_; }
  bool strictly_increasing() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  int n_;
  std::vector<Degree> d_;
};

class BettiVector {
 public:
  BettiVector() = default;
  explicit BettiVector(std::vector<BigInt> betti) : b_(std::move(betti)) {}

  std::size_t size() const { return b_.size(); }
  const BigInt& operator[](std::size_t i) const { return b_[i]; }
  std::span<const BigInt> values() const { return b_; }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<BigInt> b_;
};

/// Degree sequence plus Betti vector: 0 -> O^{b_{n+1}}(-d_{n+1}) -> ... -> O^{b_0}(-d_0) -> 0.
/// Immutable; every transform returns a new value.
class PureResolution {
 public:
  PureResolution(DegreeSequence degrees, BettiVector betti);

  int n() const { return degrees_.n(); }
  const DegreeSequence& degrees() const { return degrees_; }
  const BettiVector& betti() const { return betti_; }
  Degree d(std::size_t i) const { return degrees_[i]; }
  const BigInt& beta(std::size_t i) const { return betti_[i]; }

  friend bool operator==(const PureResolution&, const PureResolution&) = default;

 private:
  DegreeSequence degrees_;
  BettiVector betti_;
};

PureResolution make_resolution(int n, std::vector<Degree> degrees, std::vector<BigInt> betti);

/// F-side: the syzygies of the dual chain twisted by -d_{n+1};
/// G-side: the syzygies of the original chain.
struct SyzygyId {
  enum class Side { F, G };
  Side side = Side::F;
  int index = 1;

  friend auto operator<=>(const SyzygyId&, const SyzygyId&) = default;
};

std::string to_string(const SyzygyId& id);

struct ValidationReport {
  bool degrees_increasing = true;
  bool degrees_normalized = true;  // d_0 == 0 and d_i > 0 afterwards
  bool betti_positive = true;
  bool exact = true;
  std::vector<BigInt> defect;
  std::vector<std::string> problems;

  /// Validity does not require normalization; the criteria normalize first.
  bool ok() const { return degrees_increasing && betti_positive && exact; }
};

ValidationReport validate(const PureResolution& res);

/// Throws InvalidResolution with the first reported problem.
void require_valid(const PureResolution& res);

/// Coefficients c_k (k = 0..n) of
///   sum_i (-1)^i b_i binom_poly(t - d_i + n, n) = sum_k c_k binom_poly(t, k),
/// i.e. the forward differences at t = 0. Integral, and all zero iff the
/// Betti data is compatible with exactness.
std::vector<BigInt> hilbert_defect(const PureResolution& res);

/// Primitive positive Betti vector solving hilbert_defect == 0.
/// Requires a strictly increasing degree sequence.
BettiVector hk_betti(const DegreeSequence& degrees);

PureResolution normalize(const PureResolution& res);

/// d~_i = d_{n+1} - d_{n+1-i}, b~_i = b_{n+1-i}. Requires a normalized input.
PureResolution dualize(const PureResolution& res);

struct BettiInequality {
  std::string name;
  int index = 0;
  BigInt lhs;
  BigInt bound;
  bool holds = false;
};

std::vector<BettiInequality> betti_inequalities(const PureResolution& res);

struct RankC1 {
  BigInt rank;
  BigInt c1;
};

class InconsistentRank : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank and first Chern class by additivity along the splitting sequences.
/// Throws InconsistentRank when the rank comes out <= 0.
RankC1 syzygy_rank_c1(const PureResolution& res, SyzygyId id);

}  // namespace syz
