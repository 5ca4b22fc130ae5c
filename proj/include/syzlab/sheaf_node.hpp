#pragma once

#include <string>
#include <vector>

#include "syzlab/resolution.hpp"

namespace syz {

struct LineTerm {
  Degree twist = 0;
  BigInt mult = 1;

  friend bool operator==(const LineTerm&, const LineTerm&) = default;
};

/// Symbolic sheaf over a pure resolution, kept in canonical form:
///  - LineSum:    sum of O(twist)^mult, sorted by twist, no zero multiplicities
///  - Syzygy:     S(t) for a syzygy S
///  - DualSyzygy: S^dual(t)
///  - Tensor:     (A tensor B^dual)(t), A and B on the same side
/// Twists are pushed into the node; dual is an involution.
class SheafNode {
 public:
  enum class Kind { LineSum, Syzygy, DualSyzygy, Tensor };

  static SheafNode line_sum(std::vector<LineTerm> terms);
  static SheafNode line(Degree twist, BigInt mult = 1);
  static SheafNode syzygy(SyzygyId id);
  /// A tensor B^dual. Throws std::invalid_argument on mixed sides.
  static SheafNode tensor(SyzygyId a, SyzygyId b);

  Kind kind() const { return kind_; }
  const std::vector<LineTerm>& terms() const { return terms_; }
  SyzygyId first() const { return a_; }
  SyzygyId second() const { return b_; }
  Degree twist() const { return twist_; }

  std::string to_string() const;

  friend SheafNode dual(const SheafNode& x);
  friend SheafNode twist(const SheafNode& x, Degree t);

  friend bool operator==(const SheafNode&, const SheafNode&) = default;

 private:
  SheafNode() = default;

  Kind kind_ = Kind::LineSum;
  std::vector<LineTerm> terms_;
  SyzygyId a_{};
  SyzygyId b_{};
  Degree twist_ = 0;
};

SheafNode dual(const SheafNode& x);
SheafNode twist(const SheafNode& x, Degree t);

/// Rewrites G-side syzygies in terms of F-side ones using G_i = F_{n-i}^dual(-d_{n+1}).
/// The result only mentions F-side ids, with indices in [1, n-1].
SheafNode to_f_side(const PureResolution& res, const SheafNode& node);

/// Euler characteristic of node(t) by additivity along the splitting sequences,
/// reduced to line bundles. Independent of the cohomology engine.
BigInt euler_char(const PureResolution& res, const SheafNode& node, Degree t);

}  // namespace syz
