#pragma once

#include <vector>

#include "pcurv/ore.hpp"
#include "pcurv/series.hpp"

namespace pcurv {

/// psi mod Z^e such that f = psi(theta^p - theta), given f as a power series
/// in theta known to precision at least e. When e <= p this is f(-Z) mod Z^e;
/// otherwise f(t) with t = -Z - Z^p - Z^(p^2) - ..., the root of t^p - t = Z.
Poly decompose_central(const LaurentSeries& f, long e);
Poly decompose_central(const Poly& f, long e);

/// psi(theta^p - theta), exactly or mod theta^m.
Poly compose_central(const Poly& psi);
Poly compose_central_trunc(const Poly& psi, std::size_t m);

/// sum_j h_j * theta (theta - 1) ... (theta - j + 1), i.e. sum_j h_j x^j d^j.
Poly x_d_to_theta(const std::vector<u64>& h, const Field& f);
/// The inverse: coefficients in the falling factorial basis.
std::vector<u64> theta_to_x_d(const Poly& g);

/// The isomorphism F_p[x]<d, d^-1> -> F_p[theta]<d, d^-1>, x -> theta d^-1.
OpThetaD x_d_to_theta_d(const OpXD& op);
/// Its inverse, theta -> x d.
OpXD theta_d_to_x_d(const OpThetaD& op);

}  // namespace pcurv
