#include "syzlab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "syzlab/catalog.hpp"
#include "syzlab/criteria.hpp"
#include "syzlab/engine.hpp"
#include "syzlab/json_io.hpp"

namespace syz {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& text) {
  throw std::invalid_argument("bad bundle '" + text + "': " + what);
}

long long parse_int(const std::string& s, const std::string& text) {
  if (s.empty()) bad("missing integer", text);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    bad("not an integer: " + s, text);
  }
  if (used != s.size()) bad("not an integer: " + s, text);
  if (v > kMaxDegree || v < -kMaxDegree) bad("integer out of range: " + s, text);
  return v;
}

// "F1", "F_1", "G2" with an optional dual marker; returns the id and whether it was dualized.
std::pair<SyzygyId, bool> parse_factor(std::string s, const std::string& text) {
  bool dualized = false;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "^v") == 0) {
    dualized = true;
    s.resize(s.size() - 2);
  } else if (!s.empty() && s.back() == '*') {
    dualized = true;
    s.pop_back();
  }
  if (s.empty() || (s[0] != 'F' && s[0] != 'G')) bad("expected F<i> or G<i>", text);
  SyzygyId id{s[0] == 'F' ? SyzygyId::Side::F : SyzygyId::Side::G, 0};
  std::string idx = s.substr(1);
  if (!idx.empty() && idx[0] == '_') idx.erase(0, 1);
  if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](unsigned char c) { return std::isdigit(c); })) {
    bad("expected an index", text);
  }
  const long long i = parse_int(idx, text);
  if (i < 1 || i > 1000) bad("index out of range", text);
  id.index = static_cast<int>(i);
  return {id, dualized};
}

}  // namespace

SheafNode parse_bundle(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) bad("empty", text);

  if (s[0] == 'O') {
    std::vector<LineTerm> terms;
    std::stringstream parts(s);
    std::string part;
    while (std::getline(parts, part, '+')) {
      if (part.size() < 4 || part[0] != 'O' || part[1] != '(') bad("expected O(d) or O(d)^m", text);
      auto close = part.find(')');
      if (close == std::string::npos) bad("unbalanced parenthesis", text);
      LineTerm term{parse_int(part.substr(2, close - 2), text), 1};
      std::string rest = part.substr(close + 1);
      if (!rest.empty()) {
        if (rest[0] != '^') bad("expected ^m after O(d)", text);
        const long long m = parse_int(rest.substr(1), text);
        if (m < 0) bad("negative multiplicity", text);
        term.mult = m;
      }
      terms.push_back(term);
    }
    if (s.back() == '+') bad("dangling +", text);
    return SheafNode::line_sum(std::move(terms));
  }

  Degree shift = 0;
  if (s.back() == ')') {
    auto open = s.rfind('(');
    if (open == std::string::npos) bad("unbalanced parenthesis", text);
    shift = parse_int(s.substr(open + 1, s.size() - open - 2), text);
    s.resize(open);
  }

  auto x = s.find('x');
  if (x != std::string::npos) {
    auto [a, a_dual] = parse_factor(s.substr(0, x), text);
    auto [b, b_dual] = parse_factor(s.substr(x + 1), text);
    if (a_dual || !b_dual) bad("tensor must be written A x B*", text);
    if (a.side != b.side) bad("tensor factors must be on the same side", text);
    return twist(SheafNode::tensor(a, b), shift);
  }
  auto [id, dualized] = parse_factor(s, text);
  SheafNode node = SheafNode::syzygy(id);
  if (dualized) node = dual(node);
  return twist(node, shift);
}

namespace {

struct InputSource {
  std::string input;
  std::string family;
  int n = 0;
  int d = 1;
  int a = 1;
  int t = 1;
  std::string degrees;
};

void add_family_params(CLI::App* cmd, InputSource& src) {
  cmd->add_option("--n", src.n, "projective dimension");
  cmd->add_option("--d", src.d, "form degree (eagon-northcott)");
  cmd->add_option("--a", src.a, "matrix parameter (eagon-northcott)");
  cmd->add_option("--t", src.t, "socle parameter (gorenstein)");
  cmd->add_option("--degrees", src.degrees, "comma-separated degree sequence (hk)");
}

void add_input(CLI::App* cmd, InputSource& src) {
  cmd->add_option("--input", src.input, "resolution JSON file, or - for stdin");
  cmd->add_option("--family", src.family, "generate the input inline")
      ->check(CLI::IsMember({"koszul", "gorenstein", "eagon-northcott", "hk"}));
  add_family_params(cmd, src);
}

std::vector<Degree> parse_degree_list(const std::string& text) {
  std::vector<Degree> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InvalidResolution("bad degree '" + item + "'");
    }
    if (used != item.size()) throw InvalidResolution("bad degree '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidResolution("--degrees is empty");
  return out;
}

PureResolution generate(const std::string& family, const InputSource& s) {
  if (family == "koszul") return koszul(s.n);
  if (family == "gorenstein") return compressed_gorenstein(s.n, s.t);
  if (family == "eagon-northcott") return eagon_northcott(s.n, s.d, s.a);
  if (family == "hk") {
    auto deg = parse_degree_list(s.degrees);
    const int n = static_cast<int>(deg.size()) - 2;
    if (s.n != 0 && s.n != n) {
      throw InvalidResolution("--n " + std::to_string(s.n) + " does not match " + std::to_string(deg.size()) + " degrees");
    }
    DegreeSequence seq(n, deg);
    if (!seq.strictly_increasing()) throw InvalidResolution("degrees must be strictly increasing");
    return PureResolution(seq, hk_betti(seq));
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

PureResolution load(const InputSource& s, std::istream& in) {
  if (s.input.empty() == s.family.empty()) throw std::invalid_argument("give exactly one of --input and --family");
  if (!s.family.empty()) return generate(s.family, s);
  std::stringstream buf;
  if (s.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(s.input);
    if (!f) throw std::invalid_argument("cannot read '" + s.input + "'");
    buf << f.rdbuf();
  }
  return parse_resolution(buf.str());
}

std::optional<TwistWindow> window_from(const std::string& flag) {
  if (!flag.empty()) return parse_window(flag);
  if (const char* env = std::getenv("SYZLAB_WINDOW"); env && *env) return parse_window(env);
  return std::nullopt;
}

std::string witness_text(const Witness& w) {
  std::string out;
  for (const auto& [name, value] : w) {
    if (!out.empty()) out += ", ";
    out += name + "=";
    if (const auto* b = std::get_if<BigInt>(&value)) out += to_string(*b);
    else out += std::get<std::string>(value);
  }
  return out;
}

void pretty_verdict(std::ostream& out, const std::string& what, const Verdict& v) {
  std::string bundle = v.bundle.index == 0 ? "all" : to_string(v.bundle);
  out << bundle << "  " << what << ": " << to_string(v.status) << "\n";
  for (const auto& r : v.reasons) {
    out << "    " << r.criterion << " [" << r.ref << "]";
    if (!r.witness.empty()) out << " {" << witness_text(r.witness) << "}";
    out << "\n";
  }
}

int exit_for(const std::vector<Status>& statuses) {
  bool undetermined = false;
  for (Status s : statuses) {
    if (s == Status::No) return 1;
    if (s == Status::Undetermined) undetermined = true;
  }
  return undetermined ? 3 : 0;
}

// ---- verify ----

struct Check {
  std::string name;
  std::string status;  // pass | fail | skipped
  Witness witness;
};

std::vector<Check> run_verify(const PureResolution& input, std::optional<TwistWindow> window) {
  std::vector<Check> checks;
  auto report = validate(input);
  Witness dw;
  for (std::size_t k = 0; k < report.defect.size(); ++k) dw.emplace_back("c" + std::to_string(k), report.defect[k]);
  if (!report.ok()) {
    std::string why;
    for (const auto& p : report.problems) why += (why.empty() ? "" : "; ") + p;
    dw.emplace_back("problems", why);
  }
  checks.push_back({"hilbert defect vanishes", report.ok() ? "pass" : "fail", dw});
  const char* later[] = {"betti inequalities", "h0(F_{i-1}^v(d_i-d_{n+1})) = b_i", "hd(F_i) = hd(G_i) = i",
                         "sigma closed forms agree", "b0 = h1(F_1^v(-d_{n+1}))", "euler characteristic of tables"};
  if (!report.ok()) {
    for (const char* name : later) checks.push_back({name, "skipped", {}});
    return checks;
  }

  const PureResolution res = normalize(input);
  const int n = res.n();
  const Degree top = res.degrees().top();
  CohomologyEngine e(res);

  for (const auto& ineq : betti_inequalities(res)) {
    checks.push_back({"betti inequality " + ineq.name + " (i=" + std::to_string(ineq.index) + ")",
                      ineq.holds ? "pass" : "fail", {{"lhs", ineq.lhs}, {"bound", ineq.bound}}});
  }
  for (int i = 2; i <= n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    auto h0 = e.h(0, twist(dual(SheafNode::syzygy({SyzygyId::Side::F, i - 1})), res.d(ui) - top), 0);
    checks.push_back({"h0(F_{i-1}^v(d_i-d_{n+1})) = b_i (i=" + std::to_string(i) + ")",
                      h0.is_known(res.beta(ui)) ? "pass" : "fail",
                      {{"h0", h0.is_known() ? WitnessValue(h0.value()) : WitnessValue(h0.to_string())}, {"b_i", res.beta(ui)}}});
  }
  for (int i = 1; i < n; ++i) {
    for (auto side : {SyzygyId::Side::F, SyzygyId::Side::G}) {
      SyzygyId id{side, i};
      auto hd = e.hd(id, window);
      checks.push_back({"hd(" + to_string(id) + ") = " + std::to_string(i), hd.is_known(i) ? "pass" : "fail",
                        {{"hd", hd.is_known() ? WitnessValue(hd.value()) : WitnessValue(hd.to_string())}}});
    }
  }
  for (int i = 2; i < n; ++i) {
    auto s1 = sigma1_sides(res, i);
    auto s2 = sigma2_sides(res, i);
    const bool ok = s1.front == s1.back && s2.front == s2.back && s1.front >= 0 && s2.front >= 0;
    checks.push_back({"sigma closed forms agree (i=" + std::to_string(i) + ")", ok ? "pass" : "fail",
                      {{"sigma1", s1.front}, {"sigma1 back", s1.back}, {"sigma2", s2.front}, {"sigma2 back", s2.back}}});
  }
  {
    auto h1 = e.h(1, twist(dual(SheafNode::syzygy({SyzygyId::Side::F, 1})), -top), 0);
    checks.push_back({"b0 = h1(F_1^v(-d_{n+1}))", h1.is_known(res.beta(0)) ? "pass" : "fail",
                      {{"h1", h1.is_known() ? WitnessValue(h1.value()) : WitnessValue(h1.to_string())}, {"b0", res.beta(0)}}});
  }
  {
    const TwistWindow w = window.value_or(e.default_window());
    bool ok = true;
    std::string where;
    for (int i = 1; i < n && ok; ++i) {
      const SheafNode node = SheafNode::syzygy({SyzygyId::Side::F, i});
      for (Degree t = w.lo; t <= w.hi && ok; ++t) {
        auto dims = e.cohomology(node, t);
        if (!std::all_of(dims.begin(), dims.end(), [](const CohomDim& d) { return d.is_known(); })) continue;
        BigInt alt = 0;
        for (std::size_t q = 0; q < dims.size(); ++q) alt += (q % 2 ? -1 : 1) * dims[q].value();
        if (alt != euler_char(res, node, t)) {
          ok = false;
          where = "F_" + std::to_string(i) + "(" + std::to_string(t) + ")";
        }
      }
    }
    Witness w2;
    if (!ok) w2.emplace_back("at", where);
    checks.push_back({"euler characteristic of tables", ok ? "pass" : "fail", w2});
  }
  return checks;
}

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json x;
    x["name"] = c.name;
    x["status"] = c.status;
    Json w = Json::object();
    for (const auto& [k, v] : c.witness) {
      if (const auto* b = std::get_if<BigInt>(&v)) w[k] = bigint_to_json(*b);
      else w[k] = std::get<std::string>(v);
    }
    x["witness"] = w;
    arr.push_back(x);
  }
  return arr;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology and exceptionality checks for syzygy bundles of pure resolutions", "syzlab"};
  app.require_subcommand(1);

  std::string family;
  InputSource gen;
  std::string gen_format = "json";
  auto* g = app.add_subcommand("generate", "print a catalog resolution as JSON");
  g->add_option("family", family, "koszul | gorenstein | eagon-northcott | hk")
      ->required()
      ->check(CLI::IsMember({"koszul", "gorenstein", "eagon-northcott", "hk"}));
  add_family_params(g, gen);
  g->add_option("--format", gen_format)->check(CLI::IsMember({"json", "pretty"}));

  InputSource chk;
  std::string which = "both", side = "F", chk_format = "json";
  bool exhaustive = false;
  auto* c = app.add_subcommand("check", "simplicity and exceptionality verdicts");
  add_input(c, chk);
  c->add_option("--which", which)->check(CLI::IsMember({"simplicity", "exceptional", "both"}));
  c->add_option("--side", side)->check(CLI::IsMember({"F", "G"}));
  c->add_option("--format", chk_format)->check(CLI::IsMember({"json", "pretty"}));
  c->add_flag("--exhaustive", exhaustive, "run every simplicity step");

  InputSource coh;
  std::string bundle, coh_window, coh_format = "csv";
  bool parallel = false;
  auto* h = app.add_subcommand("cohomology", "table of h^q(bundle(t)) over a twist window");
  add_input(h, coh);
  h->add_option("--bundle", bundle, "F1, G2, F1*, F1xF1*, O(2)^3+O(-1), ...")->required();
  h->add_option("--window", coh_window, "LO:HI");
  h->add_option("--format", coh_format)->check(CLI::IsMember({"csv", "json"}));
  h->add_flag("--parallel", parallel, "evaluate twists concurrently");

  InputSource ver;
  std::string ver_window, ver_format = "json";
  auto* v = app.add_subcommand("verify", "run the lemma suite");
  add_input(v, ver);
  v->add_option("--window", ver_window, "LO:HI");
  v->add_option("--format", ver_format)->check(CLI::IsMember({"json", "pretty"}));

  InputSource val;
  auto* vd = app.add_subcommand("validate", "structural and exactness checks");
  add_input(vd, val);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (*g) {
    PureResolution res = generate(family, gen);
    require_valid(res);
    if (gen_format == "json") {
      out << to_json(res).dump() << "\n";
    } else {
      out << "n = " << res.n() << "\ndegrees:";
      for (Degree x : res.degrees().values()) out << " " << x;
      out << "\nbetti:";
      for (const auto& x : res.betti().values()) out << " " << to_string(x);
      out << "\n";
    }
    return 0;
  }

  if (*vd) {
    PureResolution res = load(val, in);
    auto report = validate(res);
    Json j;
    j["valid"] = report.ok();
    j["degrees_increasing"] = report.degrees_increasing;
    j["degrees_normalized"] = report.degrees_normalized;
    j["betti_positive"] = report.betti_positive;
    j["exact"] = report.exact;
    Json d = Json::array();
    for (const auto& x : report.defect) d.push_back(bigint_to_json(x));
    j["defect"] = d;
    j["problems"] = report.problems;
    out << j.dump() << "\n";
    return report.ok() ? 0 : 1;
  }

  if (*c) {
    PureResolution res = load(chk, in);
    require_valid(res);
    const auto s = side == "F" ? SyzygyId::Side::F : SyzygyId::Side::G;
    std::vector<Status> statuses;
    Json j;
    j["resolution"] = to_json(res);
    j["side"] = side;
    if (which != "exceptional") {
      auto simple = check_simplicity(res, s, {exhaustive});
      Json arr = Json::array();
      for (const auto& x : simple) {
        statuses.push_back(x.status);
        arr.push_back(to_json(x));
        if (chk_format == "pretty") pretty_verdict(out, "simple", x);
      }
      j["simplicity"] = arr;
    }
    if (which != "simplicity") {
      auto exc = check_exceptionality(res, s);
      for (const auto& x : exc.bundles) {
        statuses.push_back(x.status);
        if (chk_format == "pretty") pretty_verdict(out, "exceptional", x);
      }
      statuses.push_back(exc.aggregate.status);
      if (chk_format == "pretty") pretty_verdict(out, "exceptional", exc.aggregate);
      j["exceptionality"] = to_json(exc);
    }
    if (chk_format == "json") out << j.dump() << "\n";
    return exit_for(statuses);
  }

  if (*h) {
    PureResolution res = load(coh, in);
    require_valid(res);
    CohomologyEngine e(normalize(res));
    const SheafNode node = parse_bundle(bundle);
    const TwistWindow w = window_from(coh_window).value_or(e.default_window());
    auto table = e.table(node, w, parallel);
    if (coh_format == "csv") {
      out << to_csv(table, e.n());
    } else {
      Json j;
      j["bundle"] = node.to_string();
      Json rows = Json::array();
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        Json row;
        row["t"] = w.lo + static_cast<Degree>(r);
        Json hs = Json::array();
        for (const auto& x : table.rows[r]) hs.push_back(x.is_known() ? bigint_to_json(x.value()) : Json(x.to_string()));
        row["h"] = hs;
        rows.push_back(row);
      }
      j["rows"] = rows;
      out << j.dump() << "\n";
    }
    return 0;
  }

  if (*v) {
    PureResolution res = load(ver, in);
    auto checks = run_verify(res, window_from(ver_window));
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& x) { return x.status == "pass"; });
    if (ver_format == "json") {
      Json j;
      j["checks"] = checks_json(checks);
      j["passed"] = ok;
      out << j.dump() << "\n";
    } else {
      for (const auto& x : checks) {
        out << x.status << "  " << x.name;
        if (!x.witness.empty()) out << "  {" << witness_text(x.witness) << "}";
        out << "\n";
      }
    }
    return ok ? 0 : 1;
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, in, out, err);
  } catch (const InvalidResolution& e) {
    err << "error: invalid resolution: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentRank& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace syz
