#pragma once

#include <string>

#include "pcurv/ore.hpp"

namespace pcurv {

/// Operator text: sums, differences and products of integers, the variable
/// (x in the x frame, t for theta in the theta frame) and d, with `^` for
/// powers and parentheses. Products are taken left to right in the operator
/// ring. Negative exponents are accepted on d alone, e.g. `d^-1*x`.
/// Throws ParseError with the offending position.
OpXD parse_x_operator(const std::string& text, const Field& f);
OpThetaD parse_theta_operator(const std::string& text, const Field& f);

/// Text accepted by the parsers, highest power of d first.
std::string to_string(const OpXD& op);
std::string to_string(const OpThetaD& op);

}  // namespace pcurv
