#include "pcurv/xi.hpp"

#include <stdexcept>

#include "pcurv/charpoly_series.hpp"
#include "pcurv/convert.hpp"
#include "pcurv/error.hpp"
#include "pcurv/series.hpp"

namespace pcurv {
namespace {

template <class Op>
Op shift_exponents(const Op& l, long k) {
  Op out(l.field());
  for (const auto& [j, c] : l.terms()) out.add_term(j + k, c);
  return out;
}

Poly fact_scalar(const Poly& g, std::size_t m, const XiOptions& opts) {
  const Field f = g.field();
  if (opts.scalar_shortcut) return compose_central_trunc(scalar_central_factorial(g), m);
  Mat<Poly> b(1, 1, Poly(f));
  b(0, 0) = g;
  return factorial(b, f.p(), m, opts.factorial)(0, 0);
}

}  // namespace

long count_roots(const Poly& g) {
  if (g.is_zero()) throw ArithmeticError("count_roots of the zero polynomial");
  const Field f = g.field();
  const Poly t = Poly::variable(f);
  long v = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(g)) {
    if (factor.degree() < 1) continue;
    const Poly tp = powmod(t, f.p(), factor);
    v += static_cast<long>(mult) * gcd(factor, tp - t).degree();
  }
  return v;
}

BivarPoly xi_theta_d(const OpThetaD& l, const XiOptions& opts) {
  if (l.is_zero()) throw ArithmeticError("xi of the zero operator");
  const Field f = l.field();
  const long lo = l.low();
  const OpThetaD l0 = shift_exponents(l, -lo);
  const long r = l0.high();
  const long d = coeff_degree(l0);
  BivarPoly c(f, CentralFrame::Theta);

  if (r == 0) {
    c.add_term(0, scalar_central_factorial(l0.coeff(0)));
    return shift_v(c, lo);
  }

  const Poly& gr = l0.coeff(r);
  const long v = count_roots(gr);
  const long mg = d + 2 * v + 1, mb = d + v + 1, n = d + 1;

  const LaurentSeries gamma =
      LaurentSeries::from_poly(fact_scalar(gr, static_cast<std::size_t>(mg), opts), mg);
  if (gamma.is_zero() || gamma.val() != v)
    throw std::logic_error("valuation of Fact(g_r, p) differs from the root count");

  const ScaledCompanion bs = companion_scaled(l0);
  const Mat<Poly> beta_star = factorial(bs.matrix, f.p(), static_cast<std::size_t>(mb), opts.factorial);

  const LaurentSeries gamma_inv = inv(gamma);
  const auto rr = static_cast<std::size_t>(r);
  Mat<LaurentSeries> beta(rr, rr, LaurentSeries(f, n));
  for (std::size_t i = 0; i < rr; ++i)
    for (std::size_t j = 0; j < rr; ++j)
      beta(i, j) = (gamma_inv * LaurentSeries::from_poly(beta_star(i, j), mb)).truncated(n);

  const std::vector<LaurentSeries> chi = charpoly(beta, n, v);
  for (long i = 0; i <= r; ++i) {
    const LaurentSeries ci = (gamma * chi[static_cast<std::size_t>(i)]).truncated(n);
    c.add_term(i, decompose_central(ci, n));
  }
  return shift_v(c, lo);
}

BivarPoly xi_x_d(const OpXD& l, const XiOptions& opts) {
  if (l.is_zero()) throw ArithmeticError("xi of the zero operator");
  const BivarPoly c = theta_to_x_frame(xi_theta_d(x_d_to_theta_d(l), opts));
  if (l.low() >= 0 && c.v_low() < 0)
    throw std::logic_error("negative power of d^p in xi of a polynomial operator");
  return c;
}

BivarPoly xi_auto(const OpXD& l, const XiOptions& opts) {
  if (l.is_zero()) throw ArithmeticError("xi of the zero operator");
  if (l.low() < 0 || coeff_degree(l) < l.high()) return xi_x_d(l, opts);
  return fourier_preimage(xi_x_d(fourier(l), opts));
}

RationalXi xi_rational(const OpRatXD& l, const XiOptions& opts) {
  if (l.is_zero()) throw ArithmeticError("xi of the zero operator");
  const Field f = l.field();
  Poly den = Poly::constant(f, 1);
  for (const auto& [j, c] : l.terms()) den = den / gcd(den, c.den()) * c.den();
  Poly content(f);
  std::map<long, Poly> nums;
  for (const auto& [j, c] : l.terms()) {
    Poly nj = c.num() * (den / c.den());
    content = gcd(content, nj);
    nums.emplace(j, std::move(nj));
  }
  OpXD l0(f);
  for (const auto& [j, nj] : nums) l0.add_term(j, nj / content);
  const RatFn scale = pow(RatFn(content, den), f.p());
  return {scale, xi_x_d(l0, opts)};
}

bool is_nilpotent(const OpXD& l, const XiOptions& opts) {
  if (l.is_zero()) throw ArithmeticError("nilpotency of the zero operator");
  if (l.low() < 0) throw ArithmeticError("nilpotency needs nonnegative d-exponents");
  const long r = l.high();
  if (r < 1) throw ArithmeticError("nilpotency needs order at least 1");
  const BivarPoly c = xi_auto(l, opts);
  return c.rows().size() == 1 && c.v_low() == r;
}

}  // namespace pcurv
