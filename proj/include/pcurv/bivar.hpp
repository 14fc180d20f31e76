#pragma once

#include <map>
#include <string>

#include "pcurv/poly.hpp"

namespace pcurv {

/// Which central variables U and V stand for. In the x frame U = x^p and
/// V = d^p; in the theta frame U = theta^p - theta and V = d^p.
enum class CentralFrame { X, Theta };

/// C(U, V) = sum_j c_j(U) V^j, Laurent in V. Zero rows are never stored.
class BivarPoly {
 public:
  BivarPoly(Field f, CentralFrame frame) : field_(f), frame_(frame) {}

  const Field& field() const { return field_; }
  CentralFrame frame() const { return frame_; }
  const std::map<long, Poly>& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  /// Coefficient of V^j as a polynomial in U.
  Poly row(long j) const;
  /// Smallest and largest V exponent; 0 for the zero polynomial.
  long v_low() const { return rows_.empty() ? 0 : rows_.begin()->first; }
  long v_degree() const { return rows_.empty() ? 0 : rows_.rbegin()->first; }
  /// Largest U degree over all rows, -1 for zero.
  long u_degree() const;
  u64 coeff(long u, long v) const;

  void add_term(long j, const Poly& c);
  BivarPoly with_frame(CentralFrame frame) const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.field_ == b.field_ && a.frame_ == b.frame_ && a.rows_ == b.rows_;
  }

 private:
  Field field_;
  CentralFrame frame_;
  std::map<long, Poly> rows_;
};

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

/// V^k * c.
BivarPoly shift_v(const BivarPoly& c, long k);
/// U^a V^b -> U^a V^(a+b): theta^p - theta = x^p d^p.
BivarPoly theta_to_x_frame(const BivarPoly& c);
/// U^a V^b -> U^a V^(b-a).
BivarPoly x_to_theta_frame(const BivarPoly& c);
/// C(-V, U): Xi of the Fourier transform of L, given C = Xi(L).
BivarPoly fourier_image(const BivarPoly& c);
/// The inverse of fourier_image: C(V, -U).
BivarPoly fourier_preimage(const BivarPoly& c);

/// Monomials by decreasing V, then decreasing U, with centred coefficients,
/// e.g. "U^2*V - 3*V + 1".
std::string to_string(const BivarPoly& c);

}  // namespace pcurv
