#pragma once

#include "gli/model.hpp"
#include "json.hpp"

namespace gli {

using Json = nlohmann::ordered_json;

// {"atoms":[{"x":..,"m":..}],"segments":[{"lo":..,"hi":..,"m":..}]}
Json strategy_to_json(const MixedStrategy& strategy);

// Parses the layout above and canonicalizes the result. Throws
// MalformedStrategy on missing fields or invalid pieces.
MixedStrategy strategy_from_json(const Json& json);

}  // namespace gli
