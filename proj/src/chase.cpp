#include "syzlab/chase.hpp"

#include <optional>

namespace syz {

namespace {

struct Bound {
  BigInt lo = 0;
  std::optional<BigInt> hi;
};

bool raise_lo(Bound& b, const BigInt& v) {
  if (v > b.lo) {
    b.lo = v;
    return true;
  }
  return false;
}

bool lower_hi(Bound& b, const BigInt& v) {
  if (!b.hi || v < *b.hi) {
    b.hi = v;
    return true;
  }
  return false;
}

void check(const Bound& b, std::size_t pos, const char* what) {
  if (b.hi && *b.hi < b.lo) {
    throw InconsistentChain(std::string("no exact chain fits the data (") + what + " at position " +
                            std::to_string(pos) + ")");
  }
}

// One pass of v_j = r_j + r_{j+1} bounds propagation; r is indexed with a shift of one.
bool propagate(std::vector<Bound>& v, std::vector<Bound>& r, std::size_t j) {
  Bound& left = r[j];
  Bound& right = r[j + 1];
  Bound& val = v[j];
  bool changed = false;
  // v from r
  changed |= raise_lo(val, left.lo + right.lo);
  if (left.hi && right.hi) changed |= lower_hi(val, *left.hi + *right.hi);
  check(val, j, "dimension");
  // r from v and the other r
  if (right.hi) changed |= raise_lo(left, val.lo - *right.hi);
  if (val.hi) changed |= lower_hi(left, *val.hi - right.lo);
  check(left, j, "incoming rank");
  if (left.hi) changed |= raise_lo(right, val.lo - *left.hi);
  if (val.hi) changed |= lower_hi(right, *val.hi - left.lo);
  check(right, j, "outgoing rank");
  return changed;
}

}  // namespace

bool chase_in_place(std::span<CohomDim> chain) {
  const std::size_t m = chain.size();
  if (m == 0) return false;
  std::vector<Bound> v(m);
  for (std::size_t j = 0; j < m; ++j) v[j] = Bound{chain[j].lo(), chain[j].hi_opt()};
  std::vector<Bound> r(m + 1);
  r.front().hi = BigInt(0);
  r.back().hi = BigInt(0);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < m; ++j) changed |= propagate(v, r, j);
    for (std::size_t j = m; j-- > 0;) changed |= propagate(v, r, j);
  }

  bool any = false;
  for (std::size_t j = 0; j < m; ++j) {
    CohomDim refined = v[j].hi ? CohomDim::interval(v[j].lo, *v[j].hi) : CohomDim::at_least(v[j].lo);
    if (!(refined == chain[j])) {
      chain[j] = refined;
      any = true;
    }
  }
  return any;
}

std::vector<CohomDim> chase_ses(std::span<const CohomDim> chain) {
  std::vector<CohomDim> out(chain.begin(), chain.end());
  chase_in_place(out);
  return out;
}

}  // namespace syz
