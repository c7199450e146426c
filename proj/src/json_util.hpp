#pragma once

#include <string>

#include "json.hpp"

namespace readengine {

// Compact JSON with keys in sorted order and floating-point numbers printed
// with six significant digits; non-finite numbers become null.
std::string canonical_json(const nlohmann::json& value);

}  // namespace readengine
