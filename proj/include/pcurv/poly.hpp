#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pcurv/field.hpp"

namespace pcurv {

/// Dense univariate polynomial over F_p, lowest degree first.
///
/// Always canonical: no trailing zero coefficient, the zero polynomial has an
/// empty coefficient list. The variable name is irrelevant to the type; the
/// same class carries x, theta, eta and the central variable Z.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  /// Coefficients must already lie in [0, p).
  Poly(Field f, std::vector<u64> coeffs);

  static Poly constant(Field f, u64 c);
  static Poly monomial(Field f, u64 c, std::size_t k);
  static Poly variable(Field f) { return monomial(f, 1, 1); }
  /// Reduces signed integers mod p.
  static Poly from_ints(Field f, const std::vector<i64>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<u64>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 lead() const { return c_.empty() ? 0 : c_.back(); }
  /// Smallest exponent with a nonzero coefficient; size() for zero.
  std::size_t valuation() const;

  /// f mod x^m.
  Poly truncated(std::size_t m) const;
  /// x^k * f.
  Poly shifted_up(std::size_t k) const;
  /// floor(f / x^k).
  Poly shifted_down(std::size_t k) const;
  /// x^(n-1) f(1/x) for n >= size().
  Poly reversed(std::size_t n) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void normalize();

  Field field_;
  std::vector<u64> c_;
};

[[noreturn]] void throw_field_mismatch(const Field& a, const Field& b);
inline void check_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw_field_mismatch(a, b);
}

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, u64 c);

/// a * b mod x^m.
Poly mul_trunc(const Poly& a, const Poly& b, std::size_t m);
/// Inverse of f mod x^m; requires f(0) != 0.
Poly inv_trunc(const Poly& f, std::size_t m);

/// (q, r) with a = q*b + r and deg r < deg b.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& f);
/// i-th Hasse derivative: sum_k binom(k, i) f_k x^(k-i). Equals f^(i)/i! when i < p.
Poly hasse_derivative(const Poly& f, std::size_t i);
u64 eval(const Poly& f, u64 a);
/// f(x + a).
Poly taylor_shift(const Poly& f, u64 a);
/// f(x + a) mod x^m, from the first m Taylor coefficients at a.
Poly taylor_shift_trunc(const Poly& f, u64 a, std::size_t m);
/// f^e mod g by binary powering.
Poly powmod(const Poly& f, u64 e, const Poly& g);
/// (x - a)^m.
Poly linear_power(Field f, u64 a, std::size_t m);

struct SquarefreeFactor {
  Poly factor;
  u64 multiplicity;
};
/// g = lc(g) * prod f_i^m_i, the f_i monic, squarefree and pairwise coprime.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& g);

/// Polynomial with coefficients Z-degree-wise: sum c_i var^i, printed in ascending order.
std::string to_string(const Poly& f, const std::string& var = "x");
std::ostream& operator<<(std::ostream& os, const Poly& f);

namespace detail {
// Exposed for tests and benchmarks; operator* picks among these.
std::vector<u64> mul_schoolbook(const Field& f, const u64* a, std::size_t na, const u64* b,
                                std::size_t nb);
std::vector<u64> mul_karatsuba(const Field& f, const u64* a, std::size_t na, const u64* b,
                               std::size_t nb);
}  // namespace detail

}  // namespace pcurv
