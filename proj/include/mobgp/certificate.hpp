#pragma once

#include "mobgp/mobility.hpp"

#include <string>
#include <string_view>

namespace mobgp {

// Certificate text: a JSON object
//   {"graph": "<expr>", "initial": [ids...], "moves": [[from,to], ...],
//    "labels": ["...", ...]}
// with one move per line. "labels" is optional and informative only.
std::string write_certificate(const Schedule &s);

// Throws Error(malformed_input) on invalid JSON, missing or mistyped
// fields, negative ids, or a repeated initial vertex.
Schedule read_certificate(std::string_view text);

}  // namespace mobgp
