#include "pcurv/ore.hpp"

#include <algorithm>
#include <vector>

#include "pcurv/error.hpp"

namespace pcurv {
namespace {

template <class Op>
long max_coeff_degree(const Op& op) {
  long d = -1;
  for (const auto& [j, c] : op.terms()) d = std::max(d, c.degree());
  return d;
}

void require_nonnegative(long low, const char* what) {
  if (low < 0) throw ArithmeticError(std::string(what) + " needs nonnegative d-exponents");
}

}  // namespace

long coeff_degree(const OpXD& op) { return max_coeff_degree(op); }
long coeff_degree(const OpThetaD& op) { return max_coeff_degree(op); }

OpXD mul_xd(const OpXD& a, const OpXD& b) {
  check_same_field(a.field(), b.field());
  const Field f = a.field();
  OpXD out(f);
  for (const auto& [j, g] : b.terms()) {
    const std::size_t top = std::min<std::size_t>(g.size() - 1, f.p() - 1);
    std::vector<Poly> hasse;
    hasse.reserve(top + 1);
    for (std::size_t k = 0; k <= top; ++k) hasse.push_back(hasse_derivative(g, k));
    for (const auto& [i, fi] : a.terms()) {
      // ff = i (i-1) ... (i-k+1) mod p
      u64 ff = 1;
      const u64 n = f.from_int(i);
      for (std::size_t k = 0; k <= top; ++k) {
        if (k > 0) ff = f.mul(ff, f.sub(n, f.from_int(static_cast<i64>(k - 1))));
        // Once a factor vanishes every later term does too.
        if (ff == 0) break;
        if (hasse[k].is_zero()) continue;
        out.add_term(i - static_cast<long>(k) + j, scale(fi * hasse[k], ff));
      }
    }
  }
  return out;
}

OpThetaD mul_theta_d(const OpThetaD& a, const OpThetaD& b) {
  check_same_field(a.field(), b.field());
  const Field f = a.field();
  OpThetaD out(f);
  for (const auto& [i, g] : a.terms())
    for (const auto& [j, h] : b.terms()) out.add_term(i + j, g * taylor_shift(h, f.from_int(i)));
  return out;
}

OpRatXD mul_rat_xd(const OpRatXD& a, const OpRatXD& b) {
  check_same_field(a.field(), b.field());
  if (!a.is_zero()) require_nonnegative(a.low(), "rational operator product");
  if (!b.is_zero()) require_nonnegative(b.low(), "rational operator product");
  const Field f = a.field();
  OpRatXD out(f);
  for (const auto& [j, g] : b.terms()) {
    const long top = std::min<u64>(static_cast<u64>(a.is_zero() ? 0 : a.high()), f.p() - 1);
    std::vector<RatFn> ders{g};
    for (long k = 1; k <= top; ++k) ders.push_back(derivative(ders.back()));
    for (const auto& [i, fi] : a.terms()) {
      // binom(i, k) for k < p as falling(i, k) / k!
      u64 binom = 1;
      for (long k = 0; k <= std::min(i, top); ++k) {
        if (k > 0)
          binom = f.mul(f.mul(binom, f.from_int(i - k + 1)), f.inv(f.from_int(k)));
        if (binom == 0 || ders[static_cast<std::size_t>(k)].is_zero()) continue;
        out.add_term(i - k + j, fi * ders[static_cast<std::size_t>(k)] *
                                    RatFn(Poly::constant(f, binom)));
      }
    }
  }
  return out;
}

OpXD left_scale(const Poly& c, const OpXD& op) {
  OpXD out(op.field());
  for (const auto& [j, g] : op.terms()) out.add_term(j, c * g);
  return out;
}

OpRatXD to_rational(const OpXD& op) {
  OpRatXD out(op.field());
  for (const auto& [j, g] : op.terms()) out.add_term(j, RatFn(g));
  return out;
}

std::pair<OpRatXD, OpRatXD> right_divrem(const OpRatXD& a, const OpRatXD& b) {
  if (b.is_zero()) throw ArithmeticError("right division by the zero operator");
  check_same_field(a.field(), b.field());
  require_nonnegative(b.low(), "right division");
  if (!a.is_zero()) require_nonnegative(a.low(), "right division");
  const long n = b.high();
  const RatFn lead_inv = b.coeff(n).inverse();
  OpRatXD q(a.field()), r = a;
  while (!r.is_zero() && r.high() >= n) {
    const long k = r.high() - n;
    const OpRatXD t = OpRatXD::term(r.coeff(r.high()) * lead_inv, k);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

namespace {

template <class Op>
Mat<RatFn> companion_of(const Op& op, const Field& f) {
  if (op.is_zero()) throw ArithmeticError("companion matrix of the zero operator");
  require_nonnegative(op.low(), "companion matrix");
  const long r = op.high();
  if (r < 1) throw ArithmeticError("companion matrix needs order at least 1");
  const auto n = static_cast<std::size_t>(r);
  Mat<RatFn> m(n, n, RatFn(f));
  const RatFn lead_inv = RatFn(op.coeff(r)).inverse();
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = RatFn(Poly::constant(f, 1));
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -(RatFn(op.coeff(static_cast<long>(i))) * lead_inv);
  return m;
}

}  // namespace

Mat<RatFn> companion_matrix(const OpThetaD& op) { return companion_of(op, op.field()); }
Mat<RatFn> companion_matrix(const OpRatXD& op) { return companion_of(op, op.field()); }

ScaledCompanion companion_scaled(const OpThetaD& op) {
  if (op.is_zero()) throw ArithmeticError("companion matrix of the zero operator");
  require_nonnegative(op.low(), "companion matrix");
  const Field f = op.field();
  const long r = op.high();
  const auto n = static_cast<std::size_t>(r);
  ScaledCompanion out{op.coeff(r), Mat<Poly>(n, n, Poly(f))};
  for (std::size_t i = 0; i + 1 < n; ++i) out.matrix(i + 1, i) = out.lead;
  for (std::size_t i = 0; i < n; ++i) out.matrix(i, n - 1) = -op.coeff(static_cast<long>(i));
  return out;
}

OpXD fourier(const OpXD& op) {
  const Field f = op.field();
  if (!op.is_zero()) require_nonnegative(op.low(), "Fourier transform");
  OpXD out(f);
  for (const auto& [j, g] : op.terms()) {
    const OpXD xj = OpXD::term(Poly::monomial(f, 1, static_cast<std::size_t>(j)), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      const u64 c = (i % 2 == 0) ? g[i] : f.neg(g[i]);
      OpXD di = OpXD::term(Poly::constant(f, c), static_cast<long>(i));
      out += di * xj;
    }
  }
  return out;
}

}  // namespace pcurv
