#include "pcurv/oracle.hpp"

#include <stdexcept>
#include <string>

#include "pcurv/error.hpp"

namespace pcurv {
namespace {

void check_katz_cap(const Field& f) {
  if (f.p() > kKatzMaxPrime)
    throw ContractError("naive p-curvature is limited to p <= " + std::to_string(kKatzMaxPrime));
}

Mat<RatFn> derivative(const Mat<RatFn>& a) {
  Mat<RatFn> out = a;
  for (auto& e : out.entries()) e = pcurv::derivative(e);
  return out;
}

// g(x) -> g(x^p), which is g^p over F_p.
Poly frobenius(const Poly& g) {
  const Field& f = g.field();
  if (g.is_zero()) return g;
  std::vector<u64> v(static_cast<std::size_t>(g.degree()) * f.p() + 1, 0);
  for (std::size_t i = 0; i < g.size(); ++i) v[i * f.p()] = g[i];
  return Poly(f, std::move(v));
}

// Coefficients of g in x^p, or a logic_error if another power occurs.
Poly unfrobenius(const Poly& g) {
  const Field& f = g.field();
  std::vector<u64> v(g.size() / f.p() + 1, 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (i % f.p() != 0) throw std::logic_error("xi coefficient outside F_p[x^p]");
    v[i / f.p()] = g[i];
  }
  return Poly(f, std::move(v));
}

}  // namespace

Mat<RatFn> katz_pcurvature(const OpRatXD& l) {
  const Field f = l.field();
  check_katz_cap(f);
  const Mat<RatFn> a = companion_matrix(l);
  Mat<RatFn> ak = a;
  for (u64 k = 1; k < f.p(); ++k) ak = derivative(ak) + a * ak;
  return ak;
}

Mat<RatFn> katz_pcurvature(const OpXD& l) { return katz_pcurvature(to_rational(l)); }

std::vector<RatFn> xi_naive_rational(const OpRatXD& l) {
  if (l.is_zero()) throw ArithmeticError("xi of the zero operator");
  const Field f = l.field();
  check_katz_cap(f);
  const long r = l.high();
  const RatFn lead_p = pow(l.coeff(r), f.p());
  if (r == 0) return {lead_p};
  const std::vector<RatFn> chi =
      berkowitz_charpoly(katz_pcurvature(l), RatFn(Poly::constant(f, 1)));
  std::vector<RatFn> out;
  out.reserve(chi.size());
  for (const auto& c : chi) out.push_back(lead_p * c);
  return out;
}

BivarPoly xi_naive(const OpXD& l) {
  if (l.is_zero()) throw ArithmeticError("xi of the zero operator");
  const Field f = l.field();
  check_katz_cap(f);
  const long lo = l.low();
  OpXD l0(f);
  for (const auto& [j, c] : l.terms()) l0.add_term(j - lo, c);

  BivarPoly out(f, CentralFrame::X);
  const long r = l0.high();
  if (r == 0) {
    out.add_term(lo, l0.coeff(0));
    return out;
  }
  const Poly lead_p = frobenius(l0.coeff(r));
  const std::vector<RatFn> chi =
      berkowitz_charpoly(katz_pcurvature(l0), RatFn(Poly::constant(f, 1)));
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const RatFn c = RatFn(lead_p) * chi[i];
    if (!c.is_polynomial()) throw ArithmeticError("xi coefficient is not a polynomial");
    out.add_term(static_cast<long>(i) + lo, unfrobenius(c.num()));
  }
  return out;
}

AzElem AzElem::constant(Field f, u64 c) { return monomial(f, c, 0, 0, 0); }

AzElem AzElem::monomial(Field f, u64 c, long w, long t, long v) {
  AzElem e(f);
  e.add({w, t, v}, f.reduce(c));
  return e;
}

void AzElem::add(const Key& k, u64 c) {
  if (c == 0) return;
  const auto p = static_cast<long>(field_.p());
  if (k[1] >= p) {
    // T^t = T^(t-p) (T + W)
    add({k[0], k[1] - p + 1, k[2]}, c);
    add({k[0] + 1, k[1] - p, k[2]}, c);
    return;
  }
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) t_.erase(it);
  }
}

AzElem operator+(const AzElem& a, const AzElem& b) {
  check_same_field(a.field(), b.field());
  AzElem out = a;
  for (const auto& [k, c] : b.terms()) out.add(k, c);
  return out;
}

AzElem operator-(const AzElem& a) {
  AzElem out(a.field());
  for (const auto& [k, c] : a.terms()) out.add(k, a.field().neg(c));
  return out;
}

AzElem operator-(const AzElem& a, const AzElem& b) { return a + (-b); }

AzElem operator*(const AzElem& a, const AzElem& b) {
  check_same_field(a.field(), b.field());
  const Field& f = a.field();
  AzElem out(f);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, f.mul(ca, cb));
  return out;
}

Mat<AzElem> azumaya_matrix(const OpThetaD& l) {
  const Field f = l.field();
  const u64 p = f.p();
  if (p > kAzumayaMaxPrime)
    throw ContractError("Azumaya matrix is limited to p <= " + std::to_string(kAzumayaMaxPrime));
  const auto n = static_cast<std::size_t>(p);
  const auto pl = static_cast<long>(p);
  const AzElem t = AzElem::monomial(f, 1, 0, 1, 0);

  Mat<AzElem> m(n, n, AzElem(f));
  for (std::size_t row = 0; row < n; ++row) {
    // Powers of T + row.
    std::vector<AzElem> pw{AzElem::constant(f, 1)};
    const AzElem shifted = t + AzElem::constant(f, row);
    for (const auto& [j, g] : l.terms()) {
      while (pw.size() < g.size()) pw.push_back(pw.back() * shifted);
      AzElem val(f);
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) val = val + AzElem::constant(f, g[i]) * pw[i];
      // Row `row` of M(d)^j is V^q e_k with row + j = q p + k.
      const long s = static_cast<long>(row) + j;
      const long k = ((s % pl) + pl) % pl;
      const long q = (s - k) / pl;
      m(row, static_cast<std::size_t>(k)) =
          m(row, static_cast<std::size_t>(k)) + val * AzElem::monomial(f, 1, 0, 0, q);
    }
  }
  return m;
}

BivarPoly azumaya_norm(const OpThetaD& l) {
  const Field f = l.field();
  const Mat<AzElem> m = azumaya_matrix(l);
  const std::vector<AzElem> chi = berkowitz_charpoly(m, AzElem::constant(f, 1));
  // det M = (-1)^p chi(0)
  AzElem det = chi[0];
  if (f.p() % 2 == 1) det = -det;
  BivarPoly out(f, CentralFrame::Theta);
  for (const auto& [k, c] : det.terms()) {
    if (k[1] != 0) throw std::logic_error("reduced norm depends on T");
    out.add_term(k[2], Poly::monomial(f, c, static_cast<std::size_t>(k[0])));
  }
  return out;
}

}  // namespace pcurv
