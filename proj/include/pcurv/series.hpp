#pragma once

#include <string>
#include <vector>

#include "pcurv/poly.hpp"
#include "pcurv/ratfn.hpp"

namespace pcurv {

/// Laurent series sum_{val <= j < prec} c_j Z^j + O(Z^prec) over F_p.
///
/// The coefficient list has exactly prec - val entries. Its first entry is
/// nonzero unless the series is indistinguishable from zero, in which case the
/// list is empty and val == prec. Arithmetic tracks absolute precision and
/// never claims coefficients it cannot justify.
class LaurentSeries {
 public:
  explicit LaurentSeries(Field f, long prec = 0) : field_(f), val_(prec), prec_(prec) {}

  static LaurentSeries zero(Field f, long prec) { return LaurentSeries(f, prec); }
  /// coeffs[k] is the coefficient of Z^(val + k); entries at or past prec are dropped
  /// and missing ones up to prec are zero.
  static LaurentSeries from_coeffs(Field f, long val, std::vector<u64> coeffs, long prec);
  static LaurentSeries from_poly(const Poly& p, long prec);
  static LaurentSeries from_ratfn(const RatFn& r, long prec);
  static LaurentSeries monomial(Field f, u64 c, long k, long prec);

  const Field& field() const { return field_; }
  long val() const { return val_; }
  long prec() const { return prec_; }
  long relprec() const { return prec_ - val_; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of Z^j; throws PrecisionError for j >= prec.
  u64 coeff(long j) const;
  const std::vector<u64>& coeffs() const { return c_; }

  /// Lowers the precision to min(prec, new_prec).
  LaurentSeries truncated(long new_prec) const;
  /// Z^k * this.
  LaurentSeries shifted(long k) const;
  /// The known coefficients as a polynomial; requires val >= 0 (or zero).
  Poly to_poly() const;

  /// Same coefficients and precision.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.field_ == b.field_ && a.val_ == b.val_ && a.prec_ == b.prec_ && a.c_ == b.c_;
  }
  /// Agreement on the common precision.
  bool agrees_with(const LaurentSeries& o) const;

 private:
  void normalize();

  Field field_;
  long val_;
  long prec_;
  std::vector<u64> c_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const LaurentSeries& a, u64 c);
/// Throws PrecisionError when a is indistinguishable from zero.
LaurentSeries inv(const LaurentSeries& a);
LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

/// f(t) mod Z^e by Horner's rule; t must have positive valuation.
LaurentSeries series_compose_trunc(const Poly& f, const LaurentSeries& t, long e);

std::string to_string(const LaurentSeries& s, const std::string& var = "Z");

}  // namespace pcurv
