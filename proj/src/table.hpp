#pragma once

#include <string>

#include "json.hpp"

namespace kbraid::detail {

using Json = nlohmann::ordered_json;

// Flattens nested objects to dotted keys and renders an aligned two-column
// table.  Arrays of scalars are joined with ", ".
std::string render_key_value_table(Json const& doc);

}  // namespace kbraid::detail
