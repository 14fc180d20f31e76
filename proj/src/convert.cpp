#include "pcurv/convert.hpp"

#include <utility>

#include "pcurv/error.hpp"

namespace pcurv {
namespace {

// prod_{i < n} (theta - base - i) and sum_j h[lo + j] prod_{i < j} (theta - base - i),
// split in halves so both are built with balanced products.
std::pair<Poly, Poly> falling_sum(const Field& f, const std::vector<u64>& h, std::size_t lo,
                                  std::size_t hi, u64 base) {
  if (hi - lo == 1) {
    return {Poly::from_ints(f, {-static_cast<i64>(base % f.p()), 1}), Poly::constant(f, h[lo])};
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  auto [pl, sl] = falling_sum(f, h, lo, mid, base);
  auto [pr, sr] = falling_sum(f, h, mid, hi, base + (mid - lo));
  return {pl * pr, sl + pl * sr};
}

// Product of (theta - base - i) for i < n.
Poly falling_product(const Field& f, u64 base, std::size_t n) {
  if (n == 0) return Poly::constant(f, 1);
  if (n == 1) return Poly::from_ints(f, {-static_cast<i64>(base % f.p()), 1});
  const std::size_t half = n / 2;
  return falling_product(f, base, half) * falling_product(f, base + half, n - half);
}

void falling_digits(const Poly& g, u64 base, std::size_t n, std::vector<u64>& out,
                    std::size_t at) {
  if (g.is_zero()) return;
  if (n == 1) {
    out[at] = g[0];
    return;
  }
  const std::size_t half = n / 2;
  auto [q, r] = divrem(g, falling_product(g.field(), base, half));
  falling_digits(r, base, half, out, at);
  falling_digits(q, base + half, n - half, out, at + half);
}

}  // namespace

Poly decompose_central(const LaurentSeries& f, long e) {
  const Field& fld = f.field();
  if (e <= 0) return Poly(fld);
  if (f.prec() < e) throw PrecisionError("central decomposition needs more precision");
  if (!f.is_zero() && f.val() < 0)
    throw ArithmeticError("central decomposition of a series with a pole");
  return decompose_central(f.truncated(e).to_poly(), e);
}

Poly decompose_central(const Poly& g, long e) {
  const Field& f = g.field();
  if (e <= 0) return Poly(f);
  const Poly h = g.truncated(static_cast<std::size_t>(e));
  if (static_cast<u64>(e) <= f.p()) {
    std::vector<u64> c(h.coeffs());
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = f.neg(c[k]);
    return Poly(f, std::move(c));
  }
  std::vector<u64> t(static_cast<std::size_t>(e), 0);
  for (u64 pw = 1; pw < static_cast<u64>(e); pw *= f.p()) {
    t[pw] = f.p() - 1;
    if (pw > static_cast<u64>(e) / f.p()) break;
  }
  LaurentSeries ts = LaurentSeries::from_coeffs(f, 0, std::move(t), e);
  return series_compose_trunc(h, ts, e).to_poly();
}

Poly compose_central(const Poly& psi) {
  const Field& f = psi.field();
  const Poly w = Poly::monomial(f, 1, f.p()) - Poly::variable(f);
  Poly acc(f);
  for (std::size_t i = psi.size(); i-- > 0;) acc = acc * w + Poly::constant(f, psi[i]);
  return acc;
}

Poly compose_central_trunc(const Poly& psi, std::size_t m) {
  const Field& f = psi.field();
  const Poly w = (Poly::monomial(f, 1, f.p()) - Poly::variable(f)).truncated(m);
  Poly acc(f);
  for (std::size_t i = psi.size(); i-- > 0;) acc = mul_trunc(acc, w, m) + Poly::constant(f, psi[i]);
  return acc.truncated(m);
}

Poly x_d_to_theta(const std::vector<u64>& h, const Field& f) {
  if (h.empty()) return Poly(f);
  return falling_sum(f, h, 0, h.size(), 0).second;
}

std::vector<u64> theta_to_x_d(const Poly& g) {
  std::vector<u64> out(g.size(), 0);
  if (!g.is_zero()) falling_digits(g, 0, g.size(), out, 0);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

OpThetaD x_d_to_theta_d(const OpXD& op) {
  const Field f = op.field();
  // x^j d^i = (x^j d^j) d^(i-j), gathered by the resulting exponent i - j.
  std::map<long, std::vector<u64>> slices;
  for (const auto& [i, g] : op.terms()) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] == 0) continue;
      auto& h = slices[i - static_cast<long>(j)];
      if (h.size() <= j) h.resize(j + 1, 0);
      h[j] = g[j];
    }
  }
  OpThetaD out(f);
  for (const auto& [l, h] : slices) out.add_term(l, x_d_to_theta(h, f));
  return out;
}

OpXD theta_d_to_x_d(const OpThetaD& op) {
  const Field f = op.field();
  OpXD out(f);
  for (const auto& [l, g] : op.terms()) {
    const std::vector<u64> h = theta_to_x_d(g);
    for (std::size_t j = 0; j < h.size(); ++j)
      if (h[j] != 0) out.add_term(l + static_cast<long>(j), Poly::monomial(f, h[j], j));
  }
  return out;
}

}  // namespace pcurv
