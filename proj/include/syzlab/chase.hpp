#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "syzlab/cohom_dim.hpp"

namespace syz {

class InconsistentChain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Refines the dimensions of an exact sequence of vector spaces
///   0 -> V_0 -> V_1 -> ... -> V_{m-1} -> 0
/// (for a short exact sequence of sheaves on P^n, the flattened long exact
/// sequence H^0A, H^0B, H^0C, H^1A, ..., H^nC of length 3(n+1)).
///
/// Model: dim V_j = r_{j-1} + r_j where r_j >= 0 is the rank of V_j -> V_{j+1}
/// and r_{-1} = r_{m-1} = 0. Interval bounds on the r_j are propagated to a
/// fixpoint and every V_j is refined to [lo r_{j-1} + lo r_j, hi r_{j-1} + hi r_j].
/// The constraint graph is a path, so the result is the exact projection of
/// the feasible set onto each V_j.
///
/// Throws InconsistentChain when no exact chain matches the input.
std::vector<CohomDim> chase_ses(std::span<const CohomDim> chain);

/// Same as chase_ses, refining in place. Returns true when anything changed.
bool chase_in_place(std::span<CohomDim> chain);

}  // namespace syz
