#pragma once

#include <string>

#include "superloop/datum.hpp"

namespace superloop {

/// Wire schema: {"dim_a": int, "dim_u": int, "mul_a"/"act"/"circ": nested
/// arrays of rational strings, "form_a"/"form_u": 2-D arrays, optional
/// "identity_a": array}. Rational strings are "p" or "p/q" with positive q.
AlgebraDatum datum_from_json_text(const std::string& text);
AlgebraDatum load_datum(const std::string& path);

std::string datum_to_json_text(const AlgebraDatum& d);
void save_datum(const AlgebraDatum& d, const std::string& path);

}  // namespace superloop
