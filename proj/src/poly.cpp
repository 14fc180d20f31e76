#include "pcurv/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pcurv/error.hpp"
#include "pcurv/ntt.hpp"

namespace pcurv {
namespace {

constexpr std::size_t kKaratsubaThreshold = 32;
constexpr std::size_t kNttThreshold = 160;
constexpr std::size_t kNewtonDivisionThreshold = 2048;

void add_into(const Field& f, std::vector<u64>& dst, std::size_t offset, const std::vector<u64>& src) {
  if (dst.size() < offset + src.size()) dst.resize(offset + src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[offset + i] = f.add(dst[offset + i], src[i]);
}

void sub_into(const Field& f, std::vector<u64>& dst, const std::vector<u64>& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = f.sub(dst[i], src[i]);
}

std::vector<u64> mul_dispatch(const Field& f, const u64* a, std::size_t na, const u64* b,
                              std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  std::size_t lo = std::min(na, nb);
  if (lo < kKaratsubaThreshold) return detail::mul_schoolbook(f, a, na, b, nb);
  if (lo < kNttThreshold) return detail::mul_karatsuba(f, a, na, b, nb);
  return detail::mul_ntt(f, a, na, b, nb);
}

}  // namespace

namespace detail {

std::vector<u64> mul_schoolbook(const Field& f, const u64* a, std::size_t na, const u64* b,
                                std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  std::vector<u64> out(na + nb - 1);
  const bool small = f.p() < (u64{1} << 32);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::size_t i0 = k >= nb ? k - nb + 1 : 0;
    std::size_t i1 = std::min(k, na - 1);
    u128 acc = 0;
    if (small) {
      for (std::size_t i = i0; i <= i1; ++i) acc += static_cast<u128>(a[i] * b[k - i]);
    } else {
      int pending = 0;
      for (std::size_t i = i0; i <= i1; ++i) {
        acc += static_cast<u128>(a[i]) * b[k - i];
        if (++pending == 8) {
          acc %= f.p();
          pending = 0;
        }
      }
    }
    out[k] = f.reduce(acc);
  }
  return out;
}

std::vector<u64> mul_karatsuba(const Field& f, const u64* a, std::size_t na, const u64* b,
                               std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  if (na < nb) return mul_karatsuba(f, b, nb, a, na);
  if (nb < kKaratsubaThreshold) return mul_schoolbook(f, a, na, b, nb);
  if (na >= 2 * nb) {
    // Unbalanced: slice the long operand into nb-sized blocks.
    std::vector<u64> out(na + nb - 1, 0);
    for (std::size_t off = 0; off < na; off += nb) {
      std::size_t len = std::min(nb, na - off);
      add_into(f, out, off, mul_karatsuba(f, a + off, len, b, nb));
    }
    return out;
  }
  std::size_t h = na / 2;
  std::size_t na1 = na - h;
  std::size_t nb0 = std::min(h, nb), nb1 = nb - nb0;
  std::vector<u64> z0 = mul_karatsuba(f, a, h, b, nb0);
  std::vector<u64> z2 = mul_karatsuba(f, a + h, na1, b + h, nb1);
  std::vector<u64> sa(std::max(h, na1), 0), sb(std::max(nb0, nb1), 0);
  for (std::size_t i = 0; i < h; ++i) sa[i] = a[i];
  for (std::size_t i = 0; i < na1; ++i) sa[i] = f.add(sa[i], a[h + i]);
  for (std::size_t i = 0; i < nb0; ++i) sb[i] = b[i];
  for (std::size_t i = 0; i < nb1; ++i) sb[i] = f.add(sb[i], b[h + i]);
  std::vector<u64> z1 = mul_karatsuba(f, sa.data(), sa.size(), sb.data(), sb.size());
  sub_into(f, z1, z0);
  sub_into(f, z1, z2);
  std::vector<u64> out(na + nb - 1, 0);
  add_into(f, out, 0, z0);
  add_into(f, out, h, z1);
  add_into(f, out, 2 * h, z2);
  out.resize(na + nb - 1);
  return out;
}

}  // namespace detail

Poly::Poly(Field f, std::vector<u64> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (u64 v : c_) {
    if (v >= field_.p()) throw ArithmeticError("coefficient out of range for F_p");
  }
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Field f, u64 c) { return Poly(f, std::vector<u64>{c % f.p()}); }

Poly Poly::monomial(Field f, u64 c, std::size_t k) {
  c %= f.p();
  if (c == 0) return Poly(f);
  std::vector<u64> v(k + 1, 0);
  v[k] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(Field f, const std::vector<i64>& coeffs) {
  std::vector<u64> v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = f.from_int(coeffs[i]);
  return Poly(f, std::move(v));
}

std::size_t Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return c_.size();
}

Poly Poly::truncated(std::size_t m) const {
  if (m >= c_.size()) return *this;
  Poly r(field_);
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(m));
  r.normalize();
  return r;
}

Poly Poly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly r(field_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shifted_down(std::size_t k) const {
  Poly r(field_);
  if (k < c_.size()) r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  return r;
}

Poly Poly::reversed(std::size_t n) const {
  if (n < c_.size()) throw ArithmeticError("reversal length shorter than polynomial");
  Poly r(field_);
  r.c_.assign(n, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[n - 1 - i] = c_[i];
  r.normalize();
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scale(*this, field_.inv(lead()));
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_field(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_field(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

void throw_field_mismatch(const Field& a, const Field& b) {
  throw ArithmeticError("modulus mismatch: " + std::to_string(a.p()) + " vs " +
                          std::to_string(b.p()));
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return Poly(a.field()) - a; }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a.field(), b.field());
  const Field& f = a.field();
  return Poly(f, mul_dispatch(f, a.coeffs().data(), a.size(), b.coeffs().data(), b.size()));
}

Poly scale(const Poly& a, u64 c) {
  const Field& f = a.field();
  c %= f.p();
  std::vector<u64> v(a.coeffs());
  for (auto& x : v) x = f.mul(x, c);
  return Poly(f, std::move(v));
}

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t m) {
  check_same_field(a.field(), b.field());
  const Field& f = a.field();
  std::size_t na = std::min(a.size(), m), nb = std::min(b.size(), m);
  if (na == 0 || nb == 0) return Poly(f);
  if (std::min(na, nb) < kKaratsubaThreshold) {
    // Only the low m coefficients are computed.
    std::size_t len = std::min(m, na + nb - 1);
    std::vector<u64> out(len);
    const bool small = f.p() < (u64{1} << 32);
    const u64* x = a.coeffs().data();
    const u64* y = b.coeffs().data();
    for (std::size_t k = 0; k < len; ++k) {
      std::size_t i0 = k >= nb ? k - nb + 1 : 0;
      std::size_t i1 = std::min(k, na - 1);
      u128 acc = 0;
      int pending = 0;
      for (std::size_t i = i0; i <= i1; ++i) {
        if (small) {
          acc += static_cast<u128>(x[i] * y[k - i]);
        } else {
          acc += static_cast<u128>(x[i]) * y[k - i];
          if (++pending == 8) {
            acc %= f.p();
            pending = 0;
          }
        }
      }
      out[k] = f.reduce(acc);
    }
    return Poly(f, std::move(out));
  }
  return (a.truncated(m) * b.truncated(m)).truncated(m);
}

Poly inv_trunc(const Poly& g, std::size_t m) {
  const Field& f = g.field();
  if (g[0] == 0) throw ArithmeticError("power series inverse of a non-unit");
  Poly r = Poly::constant(f, f.inv(g[0]));
  std::size_t prec = 1;
  while (prec < m) {
    prec = std::min(2 * prec, m);
    // r <- r (2 - g r)
    Poly e = mul_trunc(g, r, prec);
    Poly two = Poly::constant(f, 2);
    r = mul_trunc(r, two - e, prec);
  }
  return r.truncated(m);
}

namespace {

// Column by column with one reduction per coefficient; needs p < 2^32 so that
// every product fits in 64 bits.
std::pair<Poly, Poly> divrem_lazy(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  const std::size_t db = b.size() - 1, dq = a.size() - 1 - db;
  const u64 linv = f.inv(b.lead());
  const auto& ac = a.coeffs();
  std::vector<u64> nb(db);
  for (std::size_t j = 0; j < db; ++j) nb[j] = f.neg(b[j]);
  std::vector<u64> q(dq + 1), r(db);
  for (std::size_t k = dq + 1; k-- > 0;) {
    const std::size_t i = k + db, top = std::min(dq, i);
    u128 acc = ac[i];
    for (std::size_t t = k + 1; t <= top; ++t) acc += static_cast<u128>(q[t] * nb[i - t]);
    q[k] = f.mul(f.reduce(acc), linv);
  }
  for (std::size_t i = 0; i < db; ++i) {
    const std::size_t top = std::min(dq, i);
    u128 acc = ac[i];
    for (std::size_t t = 0; t <= top; ++t) acc += static_cast<u128>(q[t] * nb[i - t]);
    r[i] = f.reduce(acc);
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

std::pair<Poly, Poly> divrem_schoolbook(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  if (f.p() < (u64{1} << 32)) return divrem_lazy(a, b);
  std::vector<u64> r(a.coeffs());
  std::size_t db = b.size() - 1;
  std::size_t dq = a.size() - 1 - db;
  std::vector<u64> q(dq + 1, 0);
  u64 linv = f.inv(b.lead());
  const auto& bc = b.coeffs();
  for (std::size_t k = dq + 1; k-- > 0;) {
    u64 c = f.mul(r[k + db], linv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = f.sub(r[k + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

std::pair<Poly, Poly> divrem_newton(const Poly& a, const Poly& b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t nq = na - nb + 1;
  Poly ra = a.reversed(na).truncated(nq);
  Poly rb = b.reversed(nb);
  Poly rq = mul_trunc(ra, inv_trunc(rb, nq), nq);
  Poly q = rq.reversed(nq);
  Poly r = a.truncated(nb - 1) - mul_trunc(q, b, nb - 1);
  return {q, r};
}

}  // namespace

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  check_same_field(a.field(), b.field());
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const Field& f = a.field();
  if (a.size() < b.size()) return {Poly(f), a};
  if (b.size() == 1) return {scale(a, f.inv(b.lead())), Poly(f)};
  std::size_t nq = a.size() - b.size() + 1;
  if (nq >= kNewtonDivisionThreshold && b.size() >= kNewtonDivisionThreshold)
    return divrem_newton(a, b);
  return divrem_schoolbook(a, b);
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  check_same_field(a.field(), b.field());
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly derivative(const Poly& p) {
  const Field& f = p.field();
  if (p.size() <= 1) return Poly(f);
  std::vector<u64> v(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = f.mul(p[i], i % f.p());
  return Poly(f, std::move(v));
}

namespace {

// binom(n, k) mod p via Lucas' theorem.
u64 binom_mod(const Field& f, u64 n, u64 k) {
  const u64 p = f.p();
  u64 r = 1;
  while (n || k) {
    u64 ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    u64 num = 1, den = 1;
    for (u64 j = 0; j < ki; ++j) {
      num = f.mul(num, (ni - j) % p);
      den = f.mul(den, (j + 1) % p);
    }
    r = f.mul(r, f.mul(num, f.inv(den)));
    n /= p;
    k /= p;
  }
  return r;
}

}  // namespace

Poly hasse_derivative(const Poly& p, std::size_t i) {
  const Field& f = p.field();
  if (p.size() <= i) return Poly(f);
  if (i == 0) return p;
  std::vector<u64> v(p.size() - i);
  for (std::size_t k = i; k < p.size(); ++k) v[k - i] = f.mul(p[k], binom_mod(f, k, i));
  return Poly(f, std::move(v));
}

u64 eval(const Poly& p, u64 a) {
  const Field& f = p.field();
  a %= f.p();
  u64 r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = f.add(f.mul(r, a), p[i]);
  return r;
}

Poly taylor_shift(const Poly& p, u64 a) {
  const Field& f = p.field();
  a %= f.p();
  if (a == 0 || p.size() <= 1) return p;
  const std::size_t n = p.size() - 1;
  if (n < f.p()) {
    // All factorials up to n are invertible: the shift is one correlation.
    std::vector<u64> fact(n + 1), ifact(n + 1);
    fact[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) fact[i] = f.mul(fact[i - 1], i);
    ifact[n] = f.inv(fact[n]);
    for (std::size_t i = n; i > 0; --i) ifact[i - 1] = f.mul(ifact[i], i);
    std::vector<u64> u(n + 1), w(n + 1);
    for (std::size_t i = 0; i <= n; ++i) u[n - i] = f.mul(p[i], fact[i]);
    u64 apow = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      w[j] = f.mul(apow, ifact[j]);
      apow = f.mul(apow, a);
    }
    Poly prod = Poly(f, std::move(u)) * Poly(f, std::move(w));
    std::vector<u64> g(n + 1);
    for (std::size_t k = 0; k <= n; ++k) g[k] = f.mul(prod[n - k], ifact[k]);
    return Poly(f, std::move(g));
  }
  // Horner in x + a.
  std::vector<u64> r;
  for (std::size_t i = p.size(); i-- > 0;) {
    r.push_back(0);
    for (std::size_t j = r.size() - 1; j > 0; --j) r[j] = f.add(r[j - 1], f.mul(a, r[j]));
    r[0] = f.add(f.mul(a, r[0]), p[i]);
  }
  return Poly(f, std::move(r));
}

Poly taylor_shift_trunc(const Poly& p, u64 a, std::size_t m) {
  const Field& f = p.field();
  a %= f.p();
  if (m == 0) return Poly(f);
  if (a == 0) return p.truncated(m);
  if (m * 4 >= p.size()) return taylor_shift(p, a).truncated(m);
  // m rounds of synthetic division by (x - a).
  std::vector<u64> work(p.coeffs());
  std::vector<u64> out(m, 0);
  for (std::size_t k = 0; k < m && !work.empty(); ++k) {
    u64 carry = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      u64 next = f.add(work[i], f.mul(carry, a));
      work[i] = carry;
      carry = next;
    }
    out[k] = carry;
    work.pop_back();
  }
  return Poly(f, std::move(out));
}

Poly powmod(const Poly& base, u64 e, const Poly& g) {
  check_same_field(base.field(), g.field());
  if (g.is_zero()) throw ArithmeticError("powmod with zero modulus");
  const Field& f = base.field();
  Poly r = Poly::constant(f, 1) % g;
  Poly b = base % g;
  while (e) {
    if (e & 1) r = (r * b) % g;
    e >>= 1;
    if (e) b = (b * b) % g;
  }
  return r;
}

Poly linear_power(Field f, u64 a, std::size_t m) {
  Poly base(f, std::vector<u64>{f.neg(a % f.p()), 1});
  Poly r = Poly::constant(f, 1);
  while (m) {
    if (m & 1) r = r * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return r;
}

namespace {

// g(x) = h(x^p) = h(x)^p over F_p; returns h.
Poly pth_root(const Poly& g) {
  const Field& f = g.field();
  const u64 p = f.p();
  std::vector<u64> v((g.size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (i % p != 0) throw ArithmeticError("pth_root of a non-p-th power");
    v[i / p] = g[i];
  }
  return Poly(f, std::move(v));
}

void squarefree_rec(const Poly& g, u64 mult, std::vector<SquarefreeFactor>& out) {
  if (g.degree() <= 0) return;
  Poly c = gcd(g, derivative(g));
  Poly w = g / c;
  u64 i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_rec(pth_root(c.monic()), mult * g.field().p(), out);
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& g) {
  if (g.is_zero()) throw ArithmeticError("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  squarefree_rec(g.monic(), 1, out);
  std::sort(out.begin(), out.end(),
            [](const SquarefreeFactor& a, const SquarefreeFactor& b) {
              return a.multiplicity < b.multiplicity;
            });
  return out;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  const Field& f = p.field();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    i64 c = f.to_signed(p[i]);
    bool neg = c < 0;
    u64 mag = static_cast<u64>(neg ? -c : c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace pcurv
