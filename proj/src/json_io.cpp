#include "syzlab/json_io.hpp"

namespace syz {

namespace {

const BigInt kSafe = (BigInt(1) << 53) - 1;

Json witness_to_json(const Witness& w) {
  Json out = Json::object();
  for (const auto& [name, value] : w) {
    if (const auto* b = std::get_if<BigInt>(&value)) out[name] = bigint_to_json(*b);
    else out[name] = std::get<std::string>(value);
  }
  return out;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v <= kSafe && v >= -kSafe) return static_cast<std::int64_t>(v);
  return to_string(v);
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InvalidResolution(std::string("not an integer: ") + e.what());
    }
  }
  throw InvalidResolution("expected an integer or a decimal string, got " + j.dump());
}

Json to_json(const PureResolution& res) {
  Json out;
  out["n"] = res.n();
  Json d = Json::array();
  for (Degree x : res.degrees().values()) d.push_back(bigint_to_json(BigInt(x)));
  out["degrees"] = d;
  Json b = Json::array();
  for (const auto& x : res.betti().values()) b.push_back(bigint_to_json(x));
  out["betti"] = b;
  return out;
}

PureResolution resolution_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidResolution("resolution must be a JSON object");
  for (const char* key : {"n", "degrees", "betti"}) {
    if (!j.contains(key)) throw InvalidResolution(std::string("missing field '") + key + "'");
  }
  if (!j["degrees"].is_array() || !j["betti"].is_array()) throw InvalidResolution("'degrees' and 'betti' must be arrays");
  const BigInt n = bigint_from_json(j["n"]);
  if (n < 2 || n > 1000) throw InvalidResolution("n must be between 2 and 1000");
  std::vector<Degree> degrees;
  for (const auto& x : j["degrees"]) {
    BigInt v = bigint_from_json(x);
    if (v > kMaxDegree || v < -kMaxDegree) throw InvalidResolution("degree out of range: " + to_string(v));
    degrees.push_back(static_cast<Degree>(v));
  }
  std::vector<BigInt> betti;
  for (const auto& x : j["betti"]) betti.push_back(bigint_from_json(x));
  return make_resolution(static_cast<int>(n), std::move(degrees), std::move(betti));
}

PureResolution parse_resolution(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidResolution(std::string("malformed JSON: ") + e.what());
  }
  return resolution_from_json(j);
}

Json to_json(const Verdict& v) {
  Json out;
  out["bundle"] = v.bundle.index == 0 ? std::string(v.bundle.side == SyzygyId::Side::F ? "F" : "G") : to_string(v.bundle);
  out["status"] = to_string(v.status);
  Json reasons = Json::array();
  for (const auto& r : v.reasons) {
    Json x;
    x["criterion"] = r.criterion;
    x["ref"] = r.ref;
    x["witness"] = witness_to_json(r.witness);
    reasons.push_back(x);
  }
  out["reasons"] = reasons;
  return out;
}

Json to_json(const ExceptionalityReport& r) {
  Json out;
  Json bundles = Json::array();
  for (const auto& v : r.bundles) bundles.push_back(to_json(v));
  out["bundles"] = bundles;
  out["aggregate"] = to_json(r.aggregate);
  return out;
}

Json to_json(const ConditionCheck& c) {
  Json out;
  out["condition"] = c.name;
  out["status"] = to_string(c.status);
  out["detail"] = c.detail;
  out["witness"] = witness_to_json(c.witness);
  return out;
}

Json to_json(const CokernelPairReport& r) {
  Json out;
  out["i"] = r.index;
  Json conds = Json::array();
  for (const auto& c : r.conditions) conds.push_back(to_json(c));
  out["conditions"] = conds;
  out["w"] = r.w.is_known() ? bigint_to_json(r.w.value()) : Json(r.w.to_string());
  out["q"] = r.q ? bigint_to_json(*r.q) : Json(nullptr);
  return out;
}

Json to_json(const SteinerPairReport& r) {
  Json out;
  out["i"] = r.index;
  Json conds = Json::array();
  for (const auto& c : r.vanishings) conds.push_back(to_json(c));
  out["vanishings"] = conds;
  out["strongly_exceptional"] = to_string(r.strongly_exceptional);
  out["conclusion"] = to_json(r.conclusion);
  return out;
}

}  // namespace syz
