#pragma once

#include "bidual/term/term.hpp"

#include <json.hpp>

namespace bidual {

/// Tagged-node JSON encoding:
///   {"atom":{"name":"m","level":"bidual","star":false}}, {"unit":true},
///   {"prod":{"op":"box|loz|flat","factors":[...]}}, {"sum":[{"coeff":"1/2","term":...}]},
///   {"star":...}, {"func":{"name":"phi","arg":...}},
///   {"pair":{"atom":{...},"functional":"phi"}}
nlohmann::json to_json(const Term& t);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Term term_from_json(const nlohmann::json& j);

const char* op_name(ProductOp op);

}  // namespace bidual
