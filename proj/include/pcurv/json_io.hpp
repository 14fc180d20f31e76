#pragma once

#include <string>

#include "pcurv/bivar.hpp"

namespace pcurv {

/// {"p", "frame", "U", "V", "v_min", "coeffs"}: coeffs[j] lists the
/// coefficients of V^(v_min + j), lowest power of U first.
std::string to_json(const BivarPoly& c);
/// Inverse of to_json. Throws ParseError on malformed input.
BivarPoly bivar_from_json(const std::string& text);

}  // namespace pcurv
