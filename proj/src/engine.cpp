#include "syzlab/engine.hpp"

#include <future>
#include <mutex>
#include <sstream>

namespace syz {

TwistWindow parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("window must look like LO:HI, got '" + text + "'");
  TwistWindow w;
  try {
    std::size_t used = 0;
    w.lo = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing characters");
    std::string rest = text.substr(colon + 1);
    w.hi = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("window must look like LO:HI, got '" + text + "'");
  }
  if (w.lo > w.hi) throw std::invalid_argument("window has LO > HI: '" + text + "'");
  if (w.hi - w.lo > 100000 || w.lo < -kMaxDegree || w.hi > kMaxDegree) {
    throw std::invalid_argument("window too large: '" + text + "'");
  }
  return w;
}

std::string to_csv(const CohomologyTable& table, int n) {
  std::ostringstream os;
  os << "t";
  for (int q = 0; q <= n; ++q) os << ",q" << q;
  os << "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << table.window.lo + static_cast<Degree>(r);
    for (const auto& cell : table.rows[r]) os << "," << cell.to_string();
    os << "\n";
  }
  return os.str();
}

namespace {

// Chases the long exact sequence of 0 -> A -> B -> C -> 0; returns true on change.
bool chase3(std::vector<CohomDim>& a, std::vector<CohomDim>& b, std::vector<CohomDim>& c) {
  const std::size_t len = a.size();
  std::vector<CohomDim> flat;
  flat.reserve(3 * len);
  for (std::size_t q = 0; q < len; ++q) {
    flat.push_back(a[q]);
    flat.push_back(b[q]);
    flat.push_back(c[q]);
  }
  if (!chase_in_place(flat)) return false;
  for (std::size_t q = 0; q < len; ++q) {
    a[q] = flat[3 * q];
    b[q] = flat[3 * q + 1];
    c[q] = flat[3 * q + 2];
  }
  return true;
}

std::vector<CohomDim> scaled(std::vector<CohomDim> v, const BigInt& factor) {
  for (auto& x : v) x = x.scaled(factor);
  return v;
}

void check_agreement(const std::vector<CohomDim>& x, const std::vector<CohomDim>& y, const std::string& what) {
  for (std::size_t q = 0; q < x.size(); ++q) {
    if (x[q].is_known() && y[q].is_known() && x[q].value() != y[q].value()) {
      throw TwoSidedDisagreement(what + ": h^" + std::to_string(q) + " is " + x[q].to_string() + " from one side and " +
                                 y[q].to_string() + " from the other");
    }
  }
}

std::vector<CohomDim> meet_all(const std::vector<CohomDim>& x, const std::vector<CohomDim>& y, const std::string& what) {
  std::vector<CohomDim> out;
  out.reserve(x.size());
  for (std::size_t q = 0; q < x.size(); ++q) {
    auto m = x[q].meet(y[q]);
    if (!m) throw InconsistentChain(what + ": incompatible bounds for h^" + std::to_string(q));
    out.push_back(*m);
  }
  return out;
}

}  // namespace

CohomologyEngine::CohomologyEngine(PureResolution res) : res_(std::move(res)) { require_valid(res_); }

std::vector<CohomDim> CohomologyEngine::line_dims(Degree twist, const BigInt& mult) const {
  std::vector<CohomDim> out;
  out.reserve(static_cast<std::size_t>(n()) + 1);
  for (int q = 0; q <= n(); ++q) out.push_back(CohomDim::known(mult * line_cohom(n(), twist, q)));
  return out;
}

CohomologyEngine::Column CohomologyEngine::initial_column(Degree t) const {
  const int nn = n();
  const Degree top = res_.degrees().top();
  Column col(static_cast<std::size_t>(nn) + 1, std::vector<CohomDim>(static_cast<std::size_t>(nn) + 1));
  col.front() = line_dims(t + res_.d(0) - top, res_.beta(0));
  col.back() = line_dims(t, res_.beta(static_cast<std::size_t>(nn) + 1));
  return col;
}

// Chains j = first..last (inclusive, either direction); chain j is 0 -> F_j -> L_{j+1} -> F_{j+1} -> 0.
void CohomologyEngine::solve_column(Column& col, Degree t, int first, int last, bool to_fixpoint) const {
  const Degree top = res_.degrees().top();
  const int step = first <= last ? 1 : -1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = first;; j += step) {
      const auto uj = static_cast<std::size_t>(j);
      auto middle = line_dims(t + res_.d(uj + 1) - top, res_.beta(uj + 1));
      changed |= chase3(col[uj], middle, col[uj + 1]);
      if (j == last) break;
    }
    if (!to_fixpoint) break;
  }
}

CohomologyEngine::Column CohomologyEngine::compute_column(Degree t) const {
  const int nn = n();
  Column fwd = initial_column(t);
  if (nn >= 3) solve_column(fwd, t, 0, nn - 2, false);
  else solve_column(fwd, t, 0, 0, false);
  Column bwd = initial_column(t);
  solve_column(bwd, t, nn - 1, 1, false);

  Column joint = initial_column(t);
  for (int j = 1; j < nn; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const std::string what = "F_" + std::to_string(j) + "(" + std::to_string(t) + ")";
    check_agreement(fwd[uj], bwd[uj], what);
    joint[uj] = meet_all(fwd[uj], bwd[uj], what);
  }
  solve_column(joint, t, 0, nn - 1, true);
  return joint;
}

CohomologyEngine::Column CohomologyEngine::syzygy_system_forward(Degree t) const {
  Column fwd = initial_column(t);
  solve_column(fwd, t, 0, n() >= 3 ? n() - 2 : 0, false);
  return fwd;
}

CohomologyEngine::Column CohomologyEngine::syzygy_system_backward(Degree t) const {
  Column bwd = initial_column(t);
  solve_column(bwd, t, n() - 1, 1, false);
  return bwd;
}

std::shared_ptr<const CohomologyEngine::Column> CohomologyEngine::syzygy_column(Degree t) const {
  {
    std::shared_lock lock(mutex_);
    auto it = columns_.find(t);
    if (it != columns_.end()) return it->second;
  }
  auto col = std::make_shared<const Column>(compute_column(t));
  std::unique_lock lock(mutex_);
  return columns_.try_emplace(t, std::move(col)).first->second;
}

std::vector<CohomDim> CohomologyEngine::f_dims(int j, Degree s) const {
  const Degree top = res_.degrees().top();
  if (j == 0) return line_dims(s + res_.d(0) - top, res_.beta(0));
  if (j == n()) return line_dims(s, res_.beta(static_cast<std::size_t>(n()) + 1));
  return (*syzygy_column(s))[static_cast<std::size_t>(j)];
}

std::vector<CohomDim> CohomologyEngine::f_dual_dims(int j, Degree s) const {
  auto serre = f_dims(j, -s - n() - 1);
  return std::vector<CohomDim>(serre.rbegin(), serre.rend());
}

CohomologyEngine::Grid CohomologyEngine::compute_grid(Degree t) const {
  const int nn = n();
  const auto un = static_cast<std::size_t>(nn);
  const Degree top = res_.degrees().top();
  const Degree d0 = res_.d(0);
  const BigInt& b0 = res_.beta(0);
  const BigInt& btop = res_.beta(un + 1);

  Grid init(un + 1, std::vector<std::vector<CohomDim>>(un + 1, std::vector<CohomDim>(un + 1)));
  for (int b = 0; b <= nn; ++b) {
    const auto ub = static_cast<std::size_t>(b);
    init[0][ub] = scaled(f_dual_dims(b, t + d0 - top), b0);
    init[un][ub] = scaled(f_dual_dims(b, t), btop);
  }
  for (int a = 1; a < nn; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    init[ua][0] = scaled(f_dims(a, t + top - d0), b0);
    init[ua][un] = scaled(f_dims(a, t), btop);
    if (t == 0) {
      // the identity endomorphism: h^0(End F_a) >= 1
      init[ua][ua][0] = *init[ua][ua][0].meet(CohomDim::at_least(1));
    }
  }

  // middle terms: rows tensor the chain of F_a with F_b^v, columns the dual chain of F_b with F_a
  std::vector<std::vector<std::vector<CohomDim>>> row_mid(un, std::vector<std::vector<CohomDim>>(un + 1));
  std::vector<std::vector<std::vector<CohomDim>>> col_mid(un, std::vector<std::vector<CohomDim>>(un + 1));
  for (std::size_t k = 0; k < un; ++k) {
    for (int x = 0; x <= nn; ++x) {
      const auto ux = static_cast<std::size_t>(x);
      row_mid[k][ux] = scaled(f_dual_dims(x, t + res_.d(k + 1) - top), res_.beta(k + 1));
      col_mid[k][ux] = scaled(f_dims(x, t + top - res_.d(k + 1)), res_.beta(k + 1));
    }
  }

  auto run = [&](Grid g, bool rows, bool cols) {
    auto rm = row_mid;
    auto cm = col_mid;
    bool changed = true;
    while (changed) {
      changed = false;
      if (rows) {
        for (std::size_t a = 0; a < un; ++a)
          for (std::size_t b = 0; b <= un; ++b) changed |= chase3(g[a][b], rm[a][b], g[a + 1][b]);
      }
      if (cols) {
        for (std::size_t b = 0; b < un; ++b)
          for (std::size_t a = 0; a <= un; ++a) changed |= chase3(g[a][b + 1], cm[b][a], g[a][b]);
      }
    }
    return g;
  };

  Grid by_rows = run(init, true, false);
  Grid by_cols = run(init, false, true);
  Grid joint = init;
  for (std::size_t a = 1; a < un; ++a) {
    for (std::size_t b = 1; b < un; ++b) {
      const std::string what = "F_" + std::to_string(a) + " x F_" + std::to_string(b) + "^v(" + std::to_string(t) + ")";
      check_agreement(by_rows[a][b], by_cols[a][b], what);
      joint[a][b] = meet_all(by_rows[a][b], by_cols[a][b], what);
    }
  }
  return run(std::move(joint), true, true);
}

std::shared_ptr<const CohomologyEngine::Grid> CohomologyEngine::tensor_grid(Degree t) const {
  {
    std::shared_lock lock(mutex_);
    auto it = grids_.find(t);
    if (it != grids_.end()) return it->second;
  }
  auto grid = std::make_shared<const Grid>(compute_grid(t));
  std::unique_lock lock(mutex_);
  return grids_.try_emplace(t, std::move(grid)).first->second;
}

std::vector<CohomDim> CohomologyEngine::cohomology(const SheafNode& node, Degree t) const {
  const SheafNode f = to_f_side(res_, node);
  const Degree s = f.twist() + t;
  switch (f.kind()) {
    case SheafNode::Kind::LineSum: {
      std::vector<CohomDim> out(static_cast<std::size_t>(n()) + 1, CohomDim::known(0));
      for (const auto& term : f.terms()) {
        auto part = line_dims(term.twist + t, term.mult);
        for (std::size_t q = 0; q < out.size(); ++q) out[q] = CohomDim::known(out[q].value() + part[q].value());
      }
      return out;
    }
    case SheafNode::Kind::Syzygy:
      return f_dims(f.first().index, s);
    case SheafNode::Kind::DualSyzygy:
      return f_dual_dims(f.first().index, s);
    case SheafNode::Kind::Tensor:
      return (*tensor_grid(s))[static_cast<std::size_t>(f.first().index)][static_cast<std::size_t>(f.second().index)];
  }
  return {};
}

CohomDim CohomologyEngine::h(int q, const SheafNode& node, Degree t) const {
  if (q < 0 || q > n()) throw std::out_of_range("cohomological degree outside [0, n]");
  return cohomology(node, t)[static_cast<std::size_t>(q)];
}

CohomologyTable CohomologyEngine::table(const SheafNode& node, TwistWindow window, bool parallel) const {
  if (window.lo > window.hi) throw std::invalid_argument("window has lo > hi");
  CohomologyTable out{node, window, {}};
  const auto count = static_cast<std::size_t>(window.hi - window.lo + 1);
  out.rows.resize(count);
  if (parallel) {
    std::vector<std::future<std::vector<CohomDim>>> jobs;
    jobs.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
      jobs.push_back(std::async(std::launch::async, [this, &node, t = window.lo + static_cast<Degree>(r)] {
        return cohomology(node, t);
      }));
    }
    for (std::size_t r = 0; r < count; ++r) out.rows[r] = jobs[r].get();
  } else {
    for (std::size_t r = 0; r < count; ++r) out.rows[r] = cohomology(node, window.lo + static_cast<Degree>(r));
  }
  return out;
}

TwistWindow CohomologyEngine::default_window() const {
  const Degree span = res_.degrees().top() - res_.d(0) + n() + 1;
  return {-span, span};
}

CohomDim CohomologyEngine::hd(const SheafNode& node, std::optional<TwistWindow> window) const {
  const int nn = n();
  const TwistWindow w = window.value_or(default_window());
  // per q in 1..n-1: surely zero everywhere / possibly zero everywhere
  std::vector<bool> zero(static_cast<std::size_t>(nn) + 1, true);
  std::vector<bool> maybe_zero(static_cast<std::size_t>(nn) + 1, true);
  for (Degree t = w.lo; t <= w.hi; ++t) {
    auto dims = cohomology(node, t);
    for (int q = 1; q < nn; ++q) {
      const auto uq = static_cast<std::size_t>(q);
      if (!dims[uq].is_known(0)) zero[uq] = false;
      if (dims[uq].lo() != 0) maybe_zero[uq] = false;
    }
  }
  // hd <= d  iff  H^q_* = 0 for 1 <= q <= n-d-1
  auto smallest = [&](const std::vector<bool>& ok) {
    for (int d = 0; d < nn; ++d) {
      bool all = true;
      for (int q = 1; q <= nn - d - 1; ++q) all = all && ok[static_cast<std::size_t>(q)];
      if (all) return d;
    }
    return nn - 1;
  };
  const int upper = smallest(zero);
  const int lower = smallest(maybe_zero);
  if (lower == upper) return CohomDim::known(upper);
  return CohomDim::interval(lower, upper);
}

CohomDim CohomologyEngine::hd(SyzygyId id, std::optional<TwistWindow> window) const {
  return hd(SheafNode::syzygy(id), window);
}

}  // namespace syz
