#pragma once

#include <string>

#include "locc/schmidt.hpp"

namespace locc {

// Canonical wire shape: {"coeffs": [0.45, 0.39, 0.16]}.  Malformed JSON or
// a missing/mistyped "coeffs" key throws InvalidJson; coefficient problems
// surface as the usual construction errors.
SchmidtVector schmidt_from_json(const std::string& text);

std::string schmidt_to_json(const SchmidtVector& v);

// 17 significant digits: enough to round-trip a double exactly.
std::string format_coeff(double x);

} // namespace locc
