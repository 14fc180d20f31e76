#include "pcurv/series.hpp"

#include <algorithm>
#include <sstream>

#include "pcurv/error.hpp"

namespace pcurv {

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = prec_;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<long>(lead);
  }
}

LaurentSeries LaurentSeries::from_coeffs(Field f, long val, std::vector<u64> coeffs, long prec) {
  LaurentSeries s(f, prec);
  if (val >= prec) return s;
  coeffs.resize(static_cast<std::size_t>(prec - val), 0);
  for (u64 c : coeffs)
    if (c >= f.p()) throw ArithmeticError("coefficient out of range for F_p");
  s.val_ = val;
  s.c_ = std::move(coeffs);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, long prec) {
  return from_coeffs(p.field(), 0, p.coeffs(), prec);
}

LaurentSeries LaurentSeries::from_ratfn(const RatFn& r, long prec) {
  const Field& f = r.field();
  if (r.is_zero()) return zero(f, prec);
  const long nv = static_cast<long>(r.num().valuation());
  const long dv = static_cast<long>(r.den().valuation());
  const long val = nv - dv;
  if (val >= prec) return zero(f, prec);
  const std::size_t rel = static_cast<std::size_t>(prec - val);
  Poly num = r.num().shifted_down(static_cast<std::size_t>(nv));
  Poly den = r.den().shifted_down(static_cast<std::size_t>(dv));
  Poly q = mul_trunc(num, inv_trunc(den, rel), rel);
  return from_coeffs(f, val, q.coeffs(), prec);
}

LaurentSeries LaurentSeries::monomial(Field f, u64 c, long k, long prec) {
  return from_coeffs(f, k, std::vector<u64>{c % f.p()}, prec);
}

u64 LaurentSeries::coeff(long j) const {
  if (j >= prec_) throw PrecisionError("coefficient beyond known precision");
  if (j < val_) return 0;
  return c_[static_cast<std::size_t>(j - val_)];
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
  if (new_prec >= prec_) return *this;
  LaurentSeries s(field_, new_prec);
  if (val_ >= new_prec) return s;
  s.val_ = val_;
  s.c_.assign(c_.begin(), c_.begin() + (new_prec - val_));
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::shifted(long k) const {
  LaurentSeries s = *this;
  s.val_ += k;
  s.prec_ += k;
  return s;
}

Poly LaurentSeries::to_poly() const {
  if (is_zero()) return Poly(field_);
  if (val_ < 0) throw ArithmeticError("series with negative valuation is not a polynomial");
  return Poly(field_, c_).shifted_up(static_cast<std::size_t>(val_));
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  const long p = std::min(prec_, o.prec_);
  return truncated(p) == o.truncated(p);
}

namespace {

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  check_same_field(a.field(), b.field());
  const Field& f = a.field();
  const long prec = std::min(a.prec(), b.prec());
  const long val = std::min(a.val(), b.val());
  if (val >= prec) return LaurentSeries::zero(f, prec);
  std::vector<u64> c(static_cast<std::size_t>(prec - val), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    long j = a.val() + static_cast<long>(i);
    if (j >= prec) break;
    c[static_cast<std::size_t>(j - val)] = a.coeffs()[i];
  }
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
    long j = b.val() + static_cast<long>(i);
    if (j >= prec) break;
    auto& slot = c[static_cast<std::size_t>(j - val)];
    slot = subtract ? f.sub(slot, b.coeffs()[i]) : f.add(slot, b.coeffs()[i]);
  }
  return LaurentSeries::from_coeffs(f, val, std::move(c), prec);
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, false);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, true);
}

LaurentSeries operator-(const LaurentSeries& a) { return scale(a, a.field().p() - 1); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  check_same_field(a.field(), b.field());
  const Field& f = a.field();
  const long prec = std::min(a.val() + b.prec(), b.val() + a.prec());
  const long val = a.val() + b.val();
  if (a.is_zero() || b.is_zero() || val >= prec) return LaurentSeries::zero(f, prec);
  const std::size_t len = static_cast<std::size_t>(prec - val);
  Poly pa(f, a.coeffs()), pb(f, b.coeffs());
  return LaurentSeries::from_coeffs(f, val, mul_trunc(pa, pb, len).coeffs(), prec);
}

LaurentSeries scale(const LaurentSeries& a, u64 c) {
  const Field& f = a.field();
  std::vector<u64> v(a.coeffs());
  for (auto& x : v) x = f.mul(x, c % f.p());
  return LaurentSeries::from_coeffs(f, a.val(), std::move(v), a.prec());
}

LaurentSeries inv(const LaurentSeries& a) {
  if (a.is_zero()) throw PrecisionError("inverse of a series indistinguishable from zero");
  const Field& f = a.field();
  const long rel = a.relprec();
  Poly u(f, a.coeffs());
  Poly w = inv_trunc(u, static_cast<std::size_t>(rel));
  return LaurentSeries::from_coeffs(f, -a.val(), w.coeffs(), -a.val() + rel);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * inv(b); }

LaurentSeries series_compose_trunc(const Poly& fpoly, const LaurentSeries& t, long e) {
  const Field& f = fpoly.field();
  check_same_field(f, t.field());
  if (!t.is_zero() && t.val() <= 0)
    throw ArithmeticError("composition needs a series of positive valuation");
  if (t.is_zero() && t.prec() <= 0)
    throw ArithmeticError("composition needs a series of positive valuation");
  const LaurentSeries tt = t.truncated(e);
  // Terms of degree >= e only contribute O(Z^e).
  const Poly g = fpoly.truncated(static_cast<std::size_t>(std::max<long>(e, 0)));
  LaurentSeries acc = LaurentSeries::zero(f, e);
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = acc * tt + LaurentSeries::monomial(f, g[i], 0, e);
  }
  return acc.truncated(e);
}

std::string to_string(const LaurentSeries& s, const std::string& var) {
  std::ostringstream os;
  const Field& f = s.field();
  bool first = true;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    u64 c = s.coeffs()[i];
    if (c == 0) continue;
    long j = s.val() + static_cast<long>(i);
    i64 sc = f.to_signed(c);
    os << (first ? (sc < 0 ? "-" : "") : (sc < 0 ? " - " : " + "));
    first = false;
    u64 mag = static_cast<u64>(sc < 0 ? -sc : sc);
    if (j == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (j != 1) os << "^" << j;
  }
  os << (first ? "" : " + ") << "O(" << var << "^" << s.prec() << ")";
  return os.str();
}

}  // namespace pcurv
