#pragma once

#include <optional>
#include <string>

#include "syzlab/arith.hpp"

namespace syz {

/// Dimension of a cohomology group as far as exactness forces it:
/// Known(k), Interval(lo, hi), or Unknown (lo = 0, no upper bound).
class CohomDim {
 public:
  CohomDim() = default;  // Unknown

  static CohomDim known(BigInt k) { return CohomDim(k, k); }
  static CohomDim interval(BigInt lo, BigInt hi);
  static CohomDim at_least(BigInt lo) { return CohomDim(std::move(lo), std::nullopt); }
  static CohomDim unknown() { return CohomDim(); }

  bool is_known() const { return hi_ && *hi_ == lo_; }
  bool is_unknown() const { return !hi_ && lo_ == 0; }
  bool bounded() const { return hi_.has_value(); }
  bool is_known(const BigInt& k) const { return is_known() && lo_ == k; }

  const BigInt& lo() const { return lo_; }
  /// Only meaningful when bounded().
  const BigInt& hi() const { return *hi_; }
  const std::optional<BigInt>& hi_opt() const { return hi_; }

  /// Known value; throws std::logic_error otherwise.
  const BigInt& value() const;

  bool contains(const BigInt& k) const { return k >= lo_ && (!hi_ || k <= *hi_); }

  /// Intersection; returns nullopt when empty.
  std::optional<CohomDim> meet(const CohomDim& other) const;

  CohomDim scaled(const BigInt& factor) const;

  /// CSV cell grammar: "k", "lo..hi", or "?" (also used for lo.. with no bound).
  std::string to_string() const;

  friend bool operator==(const CohomDim&, const CohomDim&) = default;

 private:
  CohomDim(BigInt lo, std::optional<BigInt> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  BigInt lo_ = 0;
  std::optional<BigInt> hi_;
};

}  // namespace syz
