#include "syzlab/cohom_dim.hpp"

#include <stdexcept>

namespace syz {

CohomDim CohomDim::interval(BigInt lo, BigInt hi) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("CohomDim interval needs 0 <= lo <= hi");
  return CohomDim(std::move(lo), std::move(hi));
}

const BigInt& CohomDim::value() const {
  if (!is_known()) throw std::logic_error("cohomology dimension is not determined: " + to_string());
  return lo_;
}

std::optional<CohomDim> CohomDim::meet(const CohomDim& other) const {
  BigInt lo = lo_ > other.lo_ ? lo_ : other.lo_;
  std::optional<BigInt> hi = hi_;
  if (other.hi_ && (!hi || *other.hi_ < *hi)) hi = other.hi_;
  if (hi && *hi < lo) return std::nullopt;
  return CohomDim(std::move(lo), std::move(hi));
}

CohomDim CohomDim::scaled(const BigInt& factor) const {
  if (factor == 0) return known(0);
  std::optional<BigInt> hi;
  if (hi_) hi = *hi_ * factor;
  return CohomDim(lo_ * factor, std::move(hi));
}

std::string CohomDim::to_string() const {
  if (!hi_) return "?";
  if (*hi_ == lo_) return lo_.str();
  return lo_.str() + ".." + hi_->str();
}

}  // namespace syz
