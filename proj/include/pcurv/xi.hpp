#pragma once

#include "pcurv/bivar.hpp"
#include "pcurv/factorial.hpp"
#include "pcurv/ore.hpp"

namespace pcurv {

struct XiOptions {
  /// Compute Fact(g_r, p) through the resultant shortcut instead of a 1x1
  /// matrix factorial.
  bool scalar_shortcut = true;
  FactorialOptions factorial;
};

/// Number of roots of g in F_p, with multiplicity.
long count_roots(const Poly& g);

/// C with Xi_{theta,d}(L) = C(theta^p - theta, d^p). Negative d-exponents are
/// allowed; the result is then Laurent in V.
BivarPoly xi_theta_d(const OpThetaD& l, const XiOptions& opts = {});

/// C with Xi_{x,d}(L) = C(x^p, d^p), through the theta side.
BivarPoly xi_x_d(const OpXD& l, const XiOptions& opts = {});

/// xi_x_d, or for d >= r the pullback of Xi of the Fourier transform.
BivarPoly xi_auto(const OpXD& l, const XiOptions& opts = {});

struct RationalXi {
  RatFn scale;   // f^p
  BivarPoly c;   // Xi of L_0
};
/// Writes L = f * L_0 with L_0 polynomial and content free.
RationalXi xi_rational(const OpRatXD& l, const XiOptions& opts = {});

/// Whether the p-curvature of L is nilpotent. Needs order at least 1.
bool is_nilpotent(const OpXD& l, const XiOptions& opts = {});

}  // namespace pcurv
