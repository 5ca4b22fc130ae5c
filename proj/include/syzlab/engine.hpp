#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzlab/chase.hpp"
#include "syzlab/cohom_dim.hpp"
#include "syzlab/resolution.hpp"
#include "syzlab/sheaf_node.hpp"

namespace syz {

/// Raised when the two recursion directions produce different Known values.
class TwoSidedDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TwistWindow {
  Degree lo = 0;
  Degree hi = 0;
};

/// Parses "LO:HI"; throws std::invalid_argument on malformed text or lo > hi.
TwistWindow parse_window(const std::string& text);

/// One row per twist, one column per cohomological degree 0..n.
struct CohomologyTable {
  SheafNode node;
  TwistWindow window;
  std::vector<std::vector<CohomDim>> rows;

  const CohomDim& at(int q, Degree t) const {
    return rows.at(static_cast<std::size_t>(t - window.lo)).at(static_cast<std::size_t>(q));
  }
};

/// "t,q0,...,qn" header, cells "k", "lo..hi" or "?".
std::string to_csv(const CohomologyTable& table, int n);

/// Cohomology of twisted syzygies, their duals and the tensors F_a x F_b^v,
/// obtained by interval propagation through the splitting sequences.
///
/// At a fixed twist t the sequences 0 -> F_j(t) -> L_{j+1}(t) -> F_{j+1}(t) -> 0
/// (j = 0..n-1, F_0 and F_n line-bundle sums) form one joint system; it is
/// solved once from the F_0 end, once from the F_n end, the two are checked
/// for agreement and then refined together to a fixpoint. Duals come from
/// Serre duality. Tensor nodes use the grid of sequences obtained by
/// tensoring the chain of F_a with F_b^v and the dual chain of F_b with F_a.
///
/// The memo tables are guarded for concurrent use; all results are a pure
/// function of (resolution, node, twist).
class CohomologyEngine {
 public:
  /// Throws InvalidResolution unless validate(res).ok().
  explicit CohomologyEngine(PureResolution res);

  const PureResolution& resolution() const { return res_; }
  int n() const { return res_.n(); }

  /// h^0..h^n of node(t).
  std::vector<CohomDim> cohomology(const SheafNode& node, Degree t) const;
  CohomDim h(int q, const SheafNode& node, Degree t) const;

  CohomologyTable table(const SheafNode& node, TwistWindow window, bool parallel = false) const;

  /// [-d_{n+1} - n - 1, d_{n+1} + n + 1] relative to d_0.
  TwistWindow default_window() const;

  /// Homological dimension read off intermediate cohomology over the window.
  CohomDim hd(const SheafNode& node, std::optional<TwistWindow> window = std::nullopt) const;
  CohomDim hd(SyzygyId id, std::optional<TwistWindow> window = std::nullopt) const;

  /// One-directional solves of the syzygy system at twist t, exposed for checks.
  /// Index j in 0..n, F_0 and F_n included.
  std::vector<std::vector<CohomDim>> syzygy_system_forward(Degree t) const;
  std::vector<std::vector<CohomDim>> syzygy_system_backward(Degree t) const;

 private:
  using Column = std::vector<std::vector<CohomDim>>;  // [j][q]
  using Grid = std::vector<std::vector<std::vector<CohomDim>>>;  // [a][b][q]

  std::vector<CohomDim> line_dims(Degree twist, const BigInt& mult) const;
  std::shared_ptr<const Column> syzygy_column(Degree t) const;
  std::shared_ptr<const Grid> tensor_grid(Degree t) const;
  std::vector<CohomDim> f_dims(int j, Degree s) const;
  std::vector<CohomDim> f_dual_dims(int j, Degree s) const;

  Column initial_column(Degree t) const;
  void solve_column(Column& col, Degree t, int first_chain, int last_chain, bool to_fixpoint) const;
  Column compute_column(Degree t) const;
  Grid compute_grid(Degree t) const;

  PureResolution res_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Degree, std::shared_ptr<const Column>> columns_;
  mutable std::map<Degree, std::shared_ptr<const Grid>> grids_;
};

}  // namespace syz
