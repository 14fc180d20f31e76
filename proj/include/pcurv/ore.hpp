#pragma once

#include <map>
#include <utility>

#include "pcurv/matrix.hpp"
#include "pcurv/poly.hpp"
#include "pcurv/ratfn.hpp"

namespace pcurv {

struct XFrame {};
struct ThetaFrame {};

/// Sum of c_j * d^j over j in Z, stored sparsely by exponent.
///
/// The tag decides the commutation rule: in XFrame the coefficients are
/// functions of x and d*f = f*d + f'; in ThetaFrame they are polynomials in
/// theta = x*d and d^i * g(theta) = g(theta + i) * d^i. Zero coefficients are
/// never stored.
template <class Frame, class C>
class Operator {
 public:
  explicit Operator(Field f) : field_(f) {}

  static Operator term(const C& c, long j) {
    Operator op(c.field());
    op.add_term(j, c);
    return op;
  }

  const Field& field() const { return field_; }
  const std::map<long, C>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  /// Smallest and largest exponent; undefined on zero.
  long low() const { return t_.begin()->first; }
  long high() const { return t_.rbegin()->first; }
  C coeff(long j) const {
    auto it = t_.find(j);
    return it == t_.end() ? C(field_) : it->second;
  }

  void add_term(long j, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(j, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  Operator& operator+=(const Operator& o) {
    check_same_field(field_, o.field_);
    for (const auto& [j, c] : o.t_) add_term(j, c);
    return *this;
  }
  Operator& operator-=(const Operator& o) {
    check_same_field(field_, o.field_);
    for (const auto& [j, c] : o.t_) add_term(j, -c);
    return *this;
  }

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator-(const Operator& a) {
    Operator r(a.field_);
    for (const auto& [j, c] : a.t_) r.t_.emplace(j, -c);
    return r;
  }
  friend bool operator==(const Operator& a, const Operator& b) {
    return a.field_ == b.field_ && a.t_ == b.t_;
  }

 private:
  Field field_;
  std::map<long, C> t_;
};

using OpXD = Operator<XFrame, Poly>;
using OpThetaD = Operator<ThetaFrame, Poly>;
using OpRatXD = Operator<XFrame, RatFn>;

/// Largest coefficient degree.
long coeff_degree(const OpXD& op);
long coeff_degree(const OpThetaD& op);

/// Product in F_p[x]<d, d^-1>: d^n f = sum_i n(n-1)...(n-i+1) f^[i] d^(n-i) with
/// Hasse derivatives f^[i]; the sum stops at min(p-1, deg f).
OpXD mul_xd(const OpXD& a, const OpXD& b);
/// Product in F_p[theta]<d, d^-1>.
OpThetaD mul_theta_d(const OpThetaD& a, const OpThetaD& b);
/// Product in F_p(x)<d>; only nonnegative exponents.
OpRatXD mul_rat_xd(const OpRatXD& a, const OpRatXD& b);

inline OpXD operator*(const OpXD& a, const OpXD& b) { return mul_xd(a, b); }
inline OpThetaD operator*(const OpThetaD& a, const OpThetaD& b) { return mul_theta_d(a, b); }
inline OpRatXD operator*(const OpRatXD& a, const OpRatXD& b) { return mul_rat_xd(a, b); }

OpXD left_scale(const Poly& f, const OpXD& op);
OpRatXD to_rational(const OpXD& op);

/// (q, r) with a = q*b + r and deg r < deg b, over F_p(x)<d>.
std::pair<OpRatXD, OpRatXD> right_divrem(const OpRatXD& a, const OpRatXD& b);

/// Companion matrix of the monic form of L = sum g_i d^i (i = 0..r): ones on
/// the subdiagonal, last column -g_i/g_r. Requires exponents in [0, r], r >= 1.
Mat<RatFn> companion_matrix(const OpThetaD& op);
Mat<RatFn> companion_matrix(const OpRatXD& op);

struct ScaledCompanion {
  Poly lead;             // g_r
  Mat<Poly> matrix;      // g_r * companion matrix
};
ScaledCompanion companion_scaled(const OpThetaD& op);

/// Image under x -> -d, d -> x; exponents must be nonnegative.
OpXD fourier(const OpXD& op);

}  // namespace pcurv
