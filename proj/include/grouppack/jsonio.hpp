#pragma once

#include <json.hpp>

#include <string>

#include "grouppack/bigint.hpp"
#include "grouppack/error.hpp"

namespace gp {

using Json = nlohmann::json;

/// Parse text into JSON, converting syntax errors to Errc::parse.
Json parse_json_text(const std::string& text);

/// Integers serialize as JSON numbers when they fit in int64, else as
/// decimal strings. Parsing accepts both forms; floats are rejected.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

}  // namespace gp
