#pragma once

#include <string>

#include <json.hpp>

#include "syzlab/criteria.hpp"
#include "syzlab/resolution.hpp"

namespace syz {

using Json = nlohmann::ordered_json;

/// Integers within +-(2^53 - 1) become JSON numbers, others decimal strings.
Json bigint_to_json(const BigInt& v);
/// Accepts a JSON integer or a decimal string; throws InvalidResolution otherwise.
BigInt bigint_from_json(const Json& j);

/// {"n": int, "degrees": [...], "betti": [...]} in that key order.
Json to_json(const PureResolution& res);
/// Throws InvalidResolution on a missing field or a value of the wrong type.
/// Does not check exactness; use validate() for that.
PureResolution resolution_from_json(const Json& j);
PureResolution parse_resolution(const std::string& text);

Json to_json(const Verdict& v);
Json to_json(const ExceptionalityReport& r);
Json to_json(const ConditionCheck& c);
Json to_json(const CokernelPairReport& r);
Json to_json(const SteinerPairReport& r);

}  // namespace syz
