#pragma once

#include <array>
#include <map>
#include <vector>

#include "pcurv/bivar.hpp"
#include "pcurv/matrix.hpp"
#include "pcurv/ore.hpp"

namespace pcurv {

/// Largest p accepted by the recurrence-based oracles.
inline constexpr u64 kKatzMaxPrime = 50;
/// Largest p accepted by the Azumaya oracle.
inline constexpr u64 kAzumayaMaxPrime = 5;

/// A_p(L) from A_1 = A, A_(k+1) = A_k' + A A_k with A the companion matrix.
Mat<RatFn> katz_pcurvature(const OpRatXD& l);
Mat<RatFn> katz_pcurvature(const OpXD& l);

/// f_r^p * chi(A_p(L))(d^p) as C(x^p, d^p). Laurent operators are shifted
/// to nonnegative exponents first. Throws ArithmeticError when a
/// coefficient is not a polynomial, std::logic_error when it is one but not
/// in F_p[x^p].
BivarPoly xi_naive(const OpXD& l);
/// Coefficients of f_r^p * chi(A_p(L)), lowest first, as functions of x.
std::vector<RatFn> xi_naive_rational(const OpRatXD& l);

/// Element of F_p[W, T, V, V^-1] with T^p = T + W. Terms are keyed by the
/// exponents (W, T, V) with the T exponent below p.
class AzElem {
 public:
  using Key = std::array<long, 3>;

  explicit AzElem(Field f) : field_(f) {}
  static AzElem constant(Field f, u64 c);
  static AzElem monomial(Field f, u64 c, long w, long t, long v);

  const Field& field() const { return field_; }
  const std::map<Key, u64>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const Key& k, u64 c);

  friend bool operator==(const AzElem& a, const AzElem& b) {
    return a.field_ == b.field_ && a.t_ == b.t_;
  }

 private:
  Field field_;
  std::map<Key, u64> t_;
};

AzElem operator+(const AzElem& a, const AzElem& b);
AzElem operator-(const AzElem& a, const AzElem& b);
AzElem operator-(const AzElem& a);
AzElem operator*(const AzElem& a, const AzElem& b);

/// M(L) with M(theta) = diag(T, ..., T + p - 1) and M(d) the cyclic matrix
/// with ones above the diagonal and V = d^p in the lower left corner.
Mat<AzElem> azumaya_matrix(const OpThetaD& l);
/// det M(L) as C(W, V) with W = theta^p - theta. Throws std::logic_error if
/// the determinant still involves T.
BivarPoly azumaya_norm(const OpThetaD& l);

}  // namespace pcurv
