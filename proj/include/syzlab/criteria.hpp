#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "syzlab/cohom_dim.hpp"
#include "syzlab/resolution.hpp"

namespace syz {

class TwoSidedMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NegativeSigma : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when two routes to the same verdict give Yes and No.
class ContradictoryVerdict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Status { Yes, No, Undetermined };

std::string to_string(Status s);

using WitnessValue = std::variant<BigInt, std::string>;
using Witness = std::vector<std::pair<std::string, WitnessValue>>;

struct Reason {
  std::string criterion;
  std::string ref;  // the mathematical statement the step relies on
  Witness witness;
};

struct Verdict {
  SyzygyId bundle;
  Status status = Status::Undetermined;
  std::vector<Reason> reasons;
};

/// sum_{k<=i} (-1)^k b_k C(d_i - d_k + n, n); checked against the closed form
/// over k > i. Requires 2 <= i <= n-1 and a valid resolution.
BigInt sigma1(const PureResolution& res, int i);
/// sum_{k<i} (-1)^k b_k C(d_i - d_k - 1, n); checked against the closed form over k >= i.
BigInt sigma2(const PureResolution& res, int i);

/// Both closed forms of each sum, exposed for checks.
struct SigmaSides {
  BigInt front;
  BigInt back;
};
SigmaSides sigma1_sides(const PureResolution& res, int i);
SigmaSides sigma2_sides(const PureResolution& res, int i);

/// b0^2 + b1^2 - C(d1 + n, n) b0 b1 (d_0 = 0 assumed, i.e. after normalize).
BigInt condition_i_value(const PureResolution& res);

/// The numerical data the sufficient exceptionality conditions depend on.
struct TheoremConditions {
  int n = 0;
  BigInt condition_i;                        // condition_i_value
  Degree d1 = 0;                             // d_1 - d_0
  std::vector<std::pair<BigInt, BigInt>> sigma;  // (sigma1, sigma2) for i = 2..n-1
};

TheoremConditions theorem_conditions(const PureResolution& res);

/// Verdict of the sufficient conditions alone: yes when all hold, no when one
/// fails outright, undetermined when the only open point is the middle index
/// of odd n with equal nonzero sigmas.
Verdict theorem_verdict(const TheoremConditions& c);

struct SimplicityOptions {
  /// Run every cascade step, record each firing, and throw ContradictoryVerdict
  /// if a later step disagrees with an earlier one.
  bool exhaustive = false;
};

/// One verdict per bundle of the chosen side, indices 1..n-1.
std::vector<Verdict> check_simplicity(const PureResolution& res, SyzygyId::Side side = SyzygyId::Side::F,
                                      SimplicityOptions options = {});

struct ExceptionalityReport {
  std::vector<Verdict> bundles;  // indices 1..n-1
  /// The whole family at once, as the sufficient conditions are stated:
  /// Yes when every bundle is Yes, No when some bundle is No.
  Verdict aggregate;
};

ExceptionalityReport check_exceptionality(const PureResolution& res, SyzygyId::Side side = SyzygyId::Side::F);

struct ConditionCheck {
  std::string name;
  Status status = Status::Undetermined;
  std::string detail;
  Witness witness;
};

/// Pair (E0, E1) = (F_{i-1}, O(d_i - d_{n+1})), 2 <= i <= n-1.
struct CokernelPairReport {
  int index = 0;
  std::vector<ConditionCheck> conditions;
  CohomDim w;  // h^0(F_{i-1}^v(d_i - d_{n+1}))
  std::optional<BigInt> q;  // 1 + b_i^2 - w b_i when w is Known
};

CokernelPairReport cokernel_pair_conditions(const PureResolution& res, int i);

struct SteinerPairReport {
  int index = 0;
  std::vector<ConditionCheck> vanishings;
  Status strongly_exceptional = Status::Undetermined;
  /// F_i is a Steiner bundle for the pair; needs the pair strongly
  /// exceptional and b0^2 + b1^2 - C(d1+n,n) b0 b1 = 1.
  ConditionCheck conclusion;
};

SteinerPairReport steiner_pair_check(const PureResolution& res, int i);

}  // namespace syz
