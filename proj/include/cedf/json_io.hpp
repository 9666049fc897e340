#pragma once

#include <string>

#include "cedf/cedf.hpp"

namespace cedf {

// Interchange schema:
//   {"v": int, "m": int, "l": int, "lambda": int,
//    "blocks": [[int, ...], ...]}
// blocks in sequence order, elements ascending, values in [0, v-1].
std::string cedf_to_json(const Cedf& c, int indent = -1);

// Parses the schema above; throws std::invalid_argument on malformed
// input (bad JSON, missing keys, out-of-range elements).
Cedf cedf_from_json(const std::string& text);

}  // namespace cedf
