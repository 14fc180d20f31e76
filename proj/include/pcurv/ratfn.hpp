#pragma once

#include <string>

#include "pcurv/poly.hpp"

namespace pcurv {

/// num/den over F_p, kept reduced: gcd(num, den) = 1 and den monic.
class RatFn {
 public:
  explicit RatFn(Field f) : num_(f), den_(Poly::constant(f, 1)) {}
  RatFn(const Poly& num) : num_(num), den_(Poly::constant(num.field(), 1)) {}  // NOLINT
  /// Throws ArithmeticError if den is zero.
  RatFn(const Poly& num, const Poly& den);

  const Field& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFn inverse() const;

  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_, den_;
};

RatFn operator+(const RatFn& a, const RatFn& b);
RatFn operator-(const RatFn& a, const RatFn& b);
RatFn operator-(const RatFn& a);
RatFn operator*(const RatFn& a, const RatFn& b);
RatFn operator/(const RatFn& a, const RatFn& b);
RatFn derivative(const RatFn& f);
RatFn pow(const RatFn& f, u64 e);

std::string to_string(const RatFn& f, const std::string& var = "x");

}  // namespace pcurv
