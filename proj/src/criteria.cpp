#include "syzlab/criteria.hpp"

#include "syzlab/engine.hpp"

namespace syz {

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes: return "yes";
    case Status::No: return "no";
    case Status::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

using Side = SyzygyId::Side;

BigInt bt(Degree m, int n) { return binom_trunc(BigInt(m), static_cast<unsigned>(n)); }

BigInt sign(int k) { return k % 2 == 0 ? BigInt(1) : BigInt(-1); }

// Sign of the closed forms summed over the back half of the resolution.
BigInt back_sign(int n, int k) { return n % 2 == 0 ? sign(k + 1) : sign(k); }

void require_middle(const PureResolution& res, int i, const char* what) {
  if (i < 2 || i > res.n() - 1) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) + " outside 2..n-1");
  }
}

WitnessValue dim_witness(const CohomDim& d) {
  if (d.is_known()) return d.value();
  return d.to_string();
}

std::string dims_text(const std::vector<CohomDim>& v) {
  std::string out = "(";
  for (std::size_t q = 0; q < v.size(); ++q) {
    if (q) out += ",";
    out += v[q].to_string();
  }
  return out + ")";
}

SyzygyId fid(int i) { return {Side::F, i}; }

// A resolution together with its dual and the engines for both.
struct Pair {
  PureResolution res;
  PureResolution dual;
  CohomologyEngine e;
  CohomologyEngine ed;

  explicit Pair(const PureResolution& input)
      : res(normalize(input)), dual(dualize(res)), e(res), ed(dual) {}

  int n() const { return res.n(); }

  // h^*(End F_k) at t = 0, read on F_k and on the dual side's F_{n-k}, intersected.
  std::vector<CohomDim> end_dims(int k) const {
    auto a = e.cohomology(SheafNode::tensor(fid(k), fid(k)), 0);
    auto b = ed.cohomology(SheafNode::tensor(fid(n() - k), fid(n() - k)), 0);
    std::vector<CohomDim> out;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (a[q].is_known() && b[q].is_known() && a[q].value() != b[q].value()) {
        throw TwoSidedDisagreement("End(F_" + std::to_string(k) + "): h^" + std::to_string(q) + " differs between the two sides");
      }
      auto m = a[q].meet(b[q]);
      if (!m) throw TwoSidedDisagreement("End(F_" + std::to_string(k) + "): incompatible bounds");
      out.push_back(*m);
    }
    return out;
  }
};


}  // namespace

SigmaSides sigma1_sides(const PureResolution& res, int i) {
  require_valid(res);
  require_middle(res, i, "sigma1");
  const int n = res.n();
  const auto ui = static_cast<std::size_t>(i);
  SigmaSides s;
  for (int k = 0; k <= i; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    s.front += sign(k) * res.beta(uk) * bt(res.d(ui) - res.d(uk) + n, n);
  }
  for (int k = i + 1; k <= n + 1; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    s.back += back_sign(n, k) * res.beta(uk) * bt(res.d(uk) - res.d(ui) - 1, n);
  }
  return s;
}

SigmaSides sigma2_sides(const PureResolution& res, int i) {
  require_valid(res);
  require_middle(res, i, "sigma2");
  const int n = res.n();
  const auto ui = static_cast<std::size_t>(i);
  SigmaSides s;
  for (int k = 0; k < i; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    s.front += sign(k) * res.beta(uk) * bt(res.d(ui) - res.d(uk) - 1, n);
  }
  for (int k = i; k <= n + 1; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    s.back += back_sign(n, k) * res.beta(uk) * bt(res.d(uk) - res.d(ui) + n, n);
  }
  return s;
}

namespace {

BigInt checked(const SigmaSides& s, const char* name, int i) {
  const std::string where = std::string(name) + "(" + std::to_string(i) + ")";
  if (s.front != s.back) {
    throw TwoSidedMismatch(where + ": front " + to_string(s.front) + " != back " + to_string(s.back));
  }
  if (s.front < 0) throw NegativeSigma(where + " = " + to_string(s.front) + " < 0");
  return s.front;
}

}  // namespace

BigInt sigma1(const PureResolution& res, int i) { return checked(sigma1_sides(res, i), "sigma1", i); }
BigInt sigma2(const PureResolution& res, int i) { return checked(sigma2_sides(res, i), "sigma2", i); }

BigInt condition_i_value(const PureResolution& res) {
  const int n = res.n();
  const BigInt& b0 = res.beta(0);
  const BigInt& b1 = res.beta(1);
  return b0 * b0 + b1 * b1 - bt(res.d(1) - res.d(0) + n, n) * b0 * b1;
}

namespace {

// ---- simplicity ----

std::vector<Verdict> simplicity_f(const Pair& p, bool exhaustive) {
  const int n = p.n();
  const PureResolution& r = p.res;
  const auto un = static_cast<std::size_t>(n);
  std::vector<Verdict> out;
  for (int i = 1; i < n; ++i) out.push_back({fid(i), Status::Undetermined, {}});

  bool settled = false;
  auto all_yes = [&](const Reason& why) {
    for (auto& v : out) {
      v.status = Status::Yes;
      v.reasons.push_back(why);
    }
    settled = true;
  };

  // (a)
  if (r.beta(0) == 1 || r.beta(un + 1) == 1) {
    all_yes({"simplicity (a): b0 = 1 or b_{n+1} = 1", "b0 = 1 or b_{n+1} = 1 implies every F_i is simple",
             {{"b0", r.beta(0)}, {"b_{n+1}", r.beta(un + 1)}}});
  }
  // (b)
  if (!settled || exhaustive) {
    const BigInt low = r.beta(1) - r.beta(0);
    const BigInt high = r.beta(un) - r.beta(un + 1);
    if (low == n || high == n) {
      all_yes({"simplicity (b): b1 - b0 = n or b_n - b_{n+1} = n",
               "F_1 or F_{n-1} is stable, and one simple F_1 or F_{n-1} makes every F_i simple",
               {{"b1-b0", low}, {"b_n-b_{n+1}", high}, {"n", BigInt(n)}}});
    }
  }
  // (c)
  if (!settled || exhaustive) {
    const BigInt c_low = condition_i_value(r);
    const BigInt& bt_ = r.beta(un + 1);
    const BigInt& bn = r.beta(un);
    const BigInt c_high = bt_ * bt_ + bn * bn - bt(r.d(un + 1) - r.d(un) + n, n) * bt_ * bn;
    if (c_low <= 1 || c_high <= 1) {
      all_yes({"simplicity (c): cokernel inequality",
               "b0^2 + b1^2 - C(d1+n,n) b0 b1 <= 1 or b_{n+1}^2 + b_n^2 - C(d_{n+1}-d_n+n,n) b_{n+1} b_n <= 1",
               {{"low", c_low}, {"high", c_high}}});
    }
  }
  // (d)
  if (!settled || exhaustive) {
    std::vector<std::vector<CohomDim>> ends;
    for (int k = 1; k < n; ++k) ends.push_back(p.end_dims(k));
    const bool edge_simple = ends.front()[0].is_known(1) || ends.back()[0].is_known(1);
    for (int k = 1; k < n; ++k) {
      const auto uk = static_cast<std::size_t>(k - 1);
      const CohomDim& h0 = ends[uk][0];
      Status s = Status::Undetermined;
      std::string ref;
      if (edge_simple) {
        s = Status::Yes;
        ref = "h^0(End F_1) = 1 or h^0(End F_{n-1}) = 1 makes every F_i simple";
      } else if (h0.is_known(1)) {
        s = Status::Yes;
        ref = "h^0(End F_i) = 1";
      } else if (h0.lo() > 1) {
        s = Status::No;
        ref = "h^0(End F_i) > 1";
      } else {
        ref = "h^0(End F_i) not forced by exactness";
      }
      Reason why{"simplicity (d): endomorphisms", ref,
                 {{"h0(End F_1)", dim_witness(ends.front()[0])},
                  {"h0(End F_{n-1})", dim_witness(ends.back()[0])},
                  {"h0(End F_i)", dim_witness(h0)}}};
      Verdict& v = out[uk];
      if (settled) {
        if (s == Status::No) {
          throw ContradictoryVerdict("simplicity of " + to_string(v.bundle) + ": step (d) says no after an earlier yes");
        }
        if (s == Status::Yes) v.reasons.push_back(why);
      } else {
        v.status = s;
        v.reasons.push_back(why);
      }
    }
  }
  return out;
}

std::vector<Verdict> relabel(std::vector<Verdict> v, Side side) {
  for (auto& x : v) x.bundle.side = side;
  return v;
}

// ---- exceptionality ----

enum class Case3 { Pass, Fail, Conjecture };

struct Route {
  std::vector<Status> bundle;  // index 1..n-1 at position i-1
  bool conjecture = false;
  std::vector<Reason> failures;  // failing conditions, for the aggregate
  std::vector<std::vector<Reason>> reasons;
};

// The sufficient conditions on one resolution's F-side.
Route theorem_route(const TheoremConditions& c) {
  const int n = c.n;
  Route out;
  out.bundle.assign(static_cast<std::size_t>(n - 1), Status::Undetermined);
  out.reasons.resize(static_cast<std::size_t>(n - 1));

  const BigInt& v = c.condition_i;
  const bool ci = v == 1;
  const bool cii = c.d1 <= n;
  bool ciii = true;
  std::vector<Reason> all;

  Reason r_i{"exceptionality (i)", "b0^2 + b1^2 - C(d1+n,n) b0 b1 = 1", {{"value", v}}};
  Reason r_ii{"exceptionality (ii)", "d1 <= n", {{"d1", BigInt(c.d1)}, {"n", BigInt(n)}}};
  all.push_back(r_i);
  all.push_back(r_ii);
  if (!ci) out.failures.push_back(r_i);
  if (!cii) out.failures.push_back(r_ii);

  for (int i = 2; i <= n - 1; ++i) {
    const BigInt& s1 = c.sigma.at(static_cast<std::size_t>(i - 2)).first;
    const BigInt& s2 = c.sigma.at(static_cast<std::size_t>(i - 2)).second;
    const bool middle = n % 2 == 1 && 2 * i == n + 1;
    Witness w{{"i", BigInt(i)}, {"sigma1", s1}, {"sigma2", s2}};
    if (!middle) {
      Reason why{"exceptionality (iii)", "h^i(F_i^v(d_i-d_{n+1})) = 0 and h^{n-i+1}(F_{i-1}(d_{n+1}-d_i)) = 0", w};
      all.push_back(why);
      if (s1 != 0 || s2 != 0) {
        ciii = false;
        out.failures.push_back(why);
      }
      continue;
    }
    const Case3 kind = s1 == 0 && s2 == 0 ? Case3::Pass : (s1 != s2 ? Case3::Fail : Case3::Conjecture);
    if (kind == Case3::Pass) {
      all.push_back({"exceptionality (iii), middle index", "both groups vanish", w});
    } else if (kind == Case3::Fail) {
      Reason why{"exceptionality (iii), middle index",
                 "H^i(F_i^v(d_i-d_{n+1})) and H^{n-i+1}(F_{i-1}(d_{n+1}-d_i)) have different dimensions, so no isomorphism",
                 w};
      all.push_back(why);
      out.failures.push_back(why);
      ciii = false;
      out.bundle[static_cast<std::size_t>(i - 1)] = Status::No;
      out.reasons[static_cast<std::size_t>(i - 1)].push_back(why);
    } else {
      Reason why{"exceptionality (iii), middle index: conjecture",
                 "equal nonzero dimensions; exceptionality would need the connecting map to be an isomorphism, which is "
                 "conjectural and not decided here",
                 w};
      all.push_back(why);
      out.failures.push_back(why);
      out.conjecture = true;
    }
  }

  if (!ci) {
    // F_1 simple with chi(End F_1) = v != 1 has higher endomorphism cohomology.
    out.bundle[0] = Status::No;
    out.reasons[0].push_back(r_i);
  }
  if (ci && cii && ciii && !out.conjecture) {
    for (std::size_t k = 0; k < out.bundle.size(); ++k) {
      out.bundle[k] = Status::Yes;
      out.reasons[k].insert(out.reasons[k].end(), all.begin(), all.end());
    }
  }
  if (out.conjecture) {
    for (auto& rs : out.reasons) rs.push_back(out.failures.back());
  }
  return out;
}

// One bundle: F_k of p.res, using the route on res (index k), on the dual (index n-k) and End(F_k).
Verdict combine(const Pair& p, const Route& here, const Route& there, int k, Side side) {
  const int n = p.n();
  Verdict v{{side, k}, Status::Undetermined, {}};
  std::vector<Status> votes;
  const auto a = static_cast<std::size_t>(k - 1);
  const auto b = static_cast<std::size_t>(n - k - 1);
  votes.push_back(here.bundle[a]);
  v.reasons.insert(v.reasons.end(), here.reasons[a].begin(), here.reasons[a].end());
  votes.push_back(there.bundle[b]);
  for (const auto& r : there.reasons[b]) {
    Reason copy = r;
    copy.criterion = "dual side: " + copy.criterion;
    v.reasons.push_back(copy);
  }

  const auto end = p.end_dims(k);
  Status direct = Status::Undetermined;
  bool higher_zero = true;
  bool higher_nonzero = false;
  for (std::size_t q = 1; q < end.size(); ++q) {
    if (!end[q].is_known(0)) higher_zero = false;
    if (end[q].lo() > 0) higher_nonzero = true;
  }
  if (higher_nonzero || end[0].lo() > 1) direct = Status::No;
  else if (higher_zero && end[0].is_known(1)) direct = Status::Yes;
  votes.push_back(direct);
  v.reasons.push_back({"exceptionality: endomorphism cohomology",
                       direct == Status::Undetermined ? "h^q(End F_i) not all forced by exactness"
                                                      : "E is exceptional iff h^0(End E) = 1 and h^q(End E) = 0 for q >= 1",
                       {{"h*(End)", dims_text(end)}}});

  bool yes = false, no = false;
  for (Status s : votes) {
    yes = yes || s == Status::Yes;
    no = no || s == Status::No;
  }
  if (yes && no) throw ContradictoryVerdict("exceptionality of " + to_string(v.bundle) + ": yes and no from different routes");
  if (no) v.status = Status::No;
  else if (here.conjecture || there.conjecture) v.status = Status::Undetermined;
  else if (yes) v.status = Status::Yes;
  return v;
}

ExceptionalityReport exceptionality_f(const Pair& p, Side side, const std::vector<Verdict>& simple) {
  const int n = p.n();
  ExceptionalityReport out;
  out.aggregate.bundle = {side, 0};
  bool all_simple = true;
  for (const auto& v : simple) all_simple = all_simple && v.status == Status::Yes;
  if (!all_simple) {
    Witness w;
    for (const auto& v : simple) w.emplace_back(to_string(v.bundle), to_string(v.status));
    Reason why{"exceptionality: simplicity prerequisite", "the sufficient conditions assume every bundle is simple", w};
    for (int k = 1; k < n; ++k) out.bundles.push_back({{side, k}, Status::Undetermined, {why}});
    out.aggregate.status = Status::Undetermined;
    out.aggregate.reasons.push_back(why);
    return out;
  }

  const Route here = theorem_route(theorem_conditions(p.res));
  const Route there = theorem_route(theorem_conditions(p.dual));
  for (int k = 1; k < n; ++k) out.bundles.push_back(combine(p, here, there, k, side));

  bool any_no = false, all_yes = true;
  for (const auto& v : out.bundles) {
    any_no = any_no || v.status == Status::No;
    all_yes = all_yes && v.status == Status::Yes;
  }
  out.aggregate.status = any_no ? Status::No : (all_yes ? Status::Yes : Status::Undetermined);
  out.aggregate.reasons = here.failures;
  if (out.aggregate.reasons.empty()) {
    out.aggregate.reasons.push_back({"exceptionality (i)-(iii)", "all sufficient conditions hold",
                                     {{"value", condition_i_value(p.res)}}});
  }
  return out;
}

}  // namespace

TheoremConditions theorem_conditions(const PureResolution& res) {
  require_valid(res);
  TheoremConditions c;
  c.n = res.n();
  c.condition_i = condition_i_value(res);
  c.d1 = res.d(1) - res.d(0);
  for (int i = 2; i < c.n; ++i) c.sigma.emplace_back(sigma1(res, i), sigma2(res, i));
  return c;
}

Verdict theorem_verdict(const TheoremConditions& c) {
  if (c.n < 2 || c.sigma.size() != static_cast<std::size_t>(c.n - 2)) {
    throw std::invalid_argument("theorem_verdict: need one sigma pair per index 2..n-1");
  }
  const Route r = theorem_route(c);
  Verdict v{{Side::F, 0}, Status::Undetermined, r.failures};
  const bool only_conjecture = r.conjecture && r.failures.size() == 1;
  if (r.failures.empty()) {
    v.status = Status::Yes;
    v.reasons.push_back({"exceptionality (i)-(iii)", "all sufficient conditions hold", {{"value", c.condition_i}}});
  } else if (!only_conjecture) {
    v.status = Status::No;
  }
  return v;
}

std::vector<Verdict> check_simplicity(const PureResolution& res, Side side, SimplicityOptions options) {
  require_valid(res);
  if (side == Side::F) {
    Pair p(res);
    return simplicity_f(p, options.exhaustive);
  }
  Pair p(dualize(normalize(res)));
  return relabel(simplicity_f(p, options.exhaustive), Side::G);
}

ExceptionalityReport check_exceptionality(const PureResolution& res, Side side) {
  require_valid(res);
  const PureResolution base = side == Side::F ? normalize(res) : dualize(normalize(res));
  Pair p(base);
  auto simple = simplicity_f(p, false);
  auto report = exceptionality_f(p, side, simple);
  return report;
}

// ---- pairs ----

namespace {

ConditionCheck vanishing(const std::string& name, const CohomDim& d) {
  ConditionCheck c{name, Status::Undetermined, "", {{"dim", dim_witness(d)}}};
  if (d.is_known(0)) {
    c.status = Status::Yes;
    c.detail = "vanishes";
  } else if (d.lo() > 0) {
    c.status = Status::No;
    c.detail = "does not vanish";
  } else {
    c.detail = "not forced by exactness";
  }
  return c;
}

}  // namespace

CokernelPairReport cokernel_pair_conditions(const PureResolution& res, int i) {
  require_valid(res);
  require_middle(res, i, "cokernel_pair_conditions");
  Pair p(res);
  const PureResolution& r = p.res;
  const auto ui = static_cast<std::size_t>(i);
  const Degree top = r.degrees().top();
  const SheafNode e0 = SheafNode::syzygy(fid(i - 1));
  const auto hom_side = p.e.cohomology(twist(e0, top - r.d(ui)), 0);
  const auto w_side = p.e.cohomology(twist(dual(e0), r.d(ui) - top), 0);

  CokernelPairReport out;
  out.index = i;
  out.w = w_side[0];

  const auto end = p.end_dims(i - 1);
  ConditionCheck simple{"E0, E1 simple", Status::Undetermined, "", {{"h0(End E0)", dim_witness(end[0])}}};
  if (end[0].is_known(1)) {
    simple.status = Status::Yes;
    simple.detail = "h^0(End F_{i-1}) = 1; E1 is a line bundle";
  } else if (end[0].lo() > 1) {
    simple.status = Status::No;
    simple.detail = "h^0(End F_{i-1}) > 1";
  } else {
    simple.detail = "h^0(End F_{i-1}) not forced by exactness";
  }
  out.conditions.push_back(simple);
  out.conditions.push_back(vanishing("Hom(E1, E0) = 0", hom_side[0]));
  out.conditions.push_back(vanishing("Ext^1(E1, E0) = 0", hom_side[1]));
  out.conditions.push_back({"E0^v x E1 globally generated", Status::Yes,
                            "quotient of O^{b_i} through the dual splitting sequence", {{"b_i", r.beta(ui)}}});

  ConditionCheck wc{"dim W >= 3", Status::Undetermined, "", {{"w", dim_witness(out.w)}}};
  if (out.w.lo() >= 3) {
    wc.status = Status::Yes;
    wc.detail = "w >= 3";
  } else if (out.w.bounded() && out.w.hi() < 3) {
    wc.status = Status::No;
    wc.detail = "w < 3";
  } else {
    wc.detail = "w not forced by exactness";
  }
  out.conditions.push_back(wc);
  if (out.w.is_known()) out.q = 1 + r.beta(ui) * r.beta(ui) - out.w.value() * r.beta(ui);
  return out;
}

SteinerPairReport steiner_pair_check(const PureResolution& res, int i) {
  require_valid(res);
  require_middle(res, i, "steiner_pair_check");
  Pair p(res);
  const PureResolution& r = p.res;
  const int n = r.n();
  const auto ui = static_cast<std::size_t>(i);
  const Degree top = r.degrees().top();
  const SheafNode e0 = SheafNode::syzygy(fid(i - 1));
  const auto e1_to_e0 = p.e.cohomology(twist(e0, top - r.d(ui)), 0);
  const auto e0_to_e1 = p.e.cohomology(twist(dual(e0), r.d(ui) - top), 0);

  SteinerPairReport out;
  out.index = i;
  for (int k = 0; k <= n; ++k) {
    out.vanishings.push_back(vanishing("Ext^" + std::to_string(k) + "(E1, E0) = 0", e1_to_e0[static_cast<std::size_t>(k)]));
  }
  for (int k = 1; k <= n; ++k) {
    out.vanishings.push_back(vanishing("Ext^" + std::to_string(k) + "(E0, E1) = 0", e0_to_e1[static_cast<std::size_t>(k)]));
  }
  // exceptional objects: E1 is a line bundle; E0 needs End E0 = C
  const auto end = p.end_dims(i - 1);
  ConditionCheck exc{"E0 exceptional", Status::Undetermined, "", {{"h*(End E0)", dims_text(end)}}};
  bool z = end[0].is_known(1), nz = end[0].lo() > 1;
  for (std::size_t q = 1; q < end.size(); ++q) {
    z = z && end[q].is_known(0);
    nz = nz || end[q].lo() > 0;
  }
  exc.status = z ? Status::Yes : (nz ? Status::No : Status::Undetermined);
  exc.detail = z ? "End E0 = C with no higher cohomology" : (nz ? "End E0 has extra cohomology" : "not forced by exactness");
  out.vanishings.push_back(exc);

  bool all = true, any_no = false;
  for (const auto& c : out.vanishings) {
    all = all && c.status == Status::Yes;
    any_no = any_no || c.status == Status::No;
  }
  out.strongly_exceptional = all ? Status::Yes : (any_no ? Status::No : Status::Undetermined);

  const BigInt v = condition_i_value(r);
  out.conclusion = {"F_i is a Steiner bundle for (F_{i-1}, O(d_i-d_{n+1}))", Status::Undetermined, "",
                    {{"condition (i) value", v}, {"strongly exceptional", to_string(out.strongly_exceptional)}}};
  if (v != 1) {
    out.conclusion.detail = "withheld: b0^2 + b1^2 - C(d1+n,n) b0 b1 != 1";
  } else if (out.strongly_exceptional == Status::Yes) {
    out.conclusion.status = Status::Yes;
    out.conclusion.detail = "pair strongly exceptional and condition (i) holds";
  } else {
    out.conclusion.detail = "withheld: pair not known to be strongly exceptional";
  }
  return out;
}

}  // namespace syz
