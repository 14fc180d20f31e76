#include "pcurv/ratfn.hpp"

#include "pcurv/error.hpp"

namespace pcurv {

RatFn::RatFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
  check_same_field(num.field(), den.field());
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  const Field& f = num.field();
  if (num_.is_zero()) {
    den_ = Poly::constant(f, 1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  u64 l = den_.lead();
  if (l != 1) {
    u64 li = f.inv(l);
    num_ = scale(num_, li);
    den_ = scale(den_, li);
  }
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of the zero rational function");
  return RatFn(den_, num_);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den() == b.den()) return RatFn(a.num() + b.num(), a.den());
  return RatFn(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  if (a.den() == b.den()) return RatFn(a.num() - b.num(), a.den());
  return RatFn(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RatFn operator-(const RatFn& a) { return RatFn(-a.num(), a.den()); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn(a.field());
  return RatFn(a.num() * b.num(), a.den() * b.den());
}

RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }

RatFn derivative(const RatFn& f) {
  if (f.is_polynomial()) return RatFn(derivative(f.num()));
  return RatFn(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

RatFn pow(const RatFn& f, u64 e) {
  RatFn r(Poly::constant(f.field(), 1));
  RatFn b = f;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string to_string(const RatFn& f, const std::string& var) {
  if (f.is_polynomial()) {
    // den is the monic constant 1.
    return to_string(f.num(), var);
  }
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace pcurv
