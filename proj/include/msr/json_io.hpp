#pragma once

#include <string>

#include "msr/solver.hpp"

namespace msr {

// {"graph6": str, "order": [ints], "dimension": int, "vectors": [[dec-str]]}
// Coordinates are serialized as decimal strings: they outgrow 64-bit
// integers well before the graphs get interesting.
std::string representation_to_json(const OrthogonalRepresentation& rep);
OrthogonalRepresentation representation_from_json(const std::string& text);

}  // namespace msr
