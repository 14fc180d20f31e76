#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcurv {

// Raised for operations that are undefined on their inputs: division by zero,
// inversion of a non-unit, mismatched moduli or dimensions.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A Laurent series computation ran out of known coefficients.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied guarantee (valuation bound, oracle size cap) did not hold.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pcurv
