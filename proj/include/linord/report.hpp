#pragma once

#include <json.hpp>

#include "linord/verdict.hpp"

namespace linord {

// {"verdict", "rule", "message", "indexOrder", "pieces", "embedding"} plus "family"/"sum" for ccs violations.
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const Witness& w);

// Inverse of to_json(Witness); throws std::invalid_argument on malformed input.
Witness witness_from_json(const nlohmann::json& j);

// 0 Holds, 2 Fails, 3 Unknown.
int exit_code(const Verdict& v);

}  // namespace linord
