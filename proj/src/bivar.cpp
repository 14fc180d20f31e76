#include "pcurv/bivar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "pcurv/error.hpp"

namespace pcurv {
namespace {

void check_compatible(const BivarPoly& a, const BivarPoly& b) {
  check_same_field(a.field(), b.field());
  if (a.frame() != b.frame()) throw ArithmeticError("bivariate polynomials in different frames");
}

// Gathers the terms of c after the change (a, b) -> (a, b + k * a).
BivarPoly skew(const BivarPoly& c, long k) {
  const Field& f = c.field();
  BivarPoly out(f, c.frame());
  for (const auto& [b, row] : c.rows())
    for (std::size_t a = 0; a < row.size(); ++a)
      if (row[a] != 0) out.add_term(b + k * static_cast<long>(a), Poly::monomial(f, row[a], a));
  return out;
}

}  // namespace

Poly BivarPoly::row(long j) const {
  auto it = rows_.find(j);
  return it == rows_.end() ? Poly(field_) : it->second;
}

long BivarPoly::u_degree() const {
  long d = -1;
  for (const auto& [j, r] : rows_) d = std::max(d, r.degree());
  return d;
}

u64 BivarPoly::coeff(long u, long v) const {
  if (u < 0) return 0;
  return row(v)[static_cast<std::size_t>(u)];
}

void BivarPoly::add_term(long j, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = rows_.emplace(j, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) rows_.erase(it);
  }
}

BivarPoly BivarPoly::with_frame(CentralFrame frame) const {
  BivarPoly out = *this;
  out.frame_ = frame;
  return out;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  check_compatible(a, b);
  BivarPoly out = a;
  for (const auto& [j, r] : b.rows()) out.add_term(j, r);
  return out;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  check_compatible(a, b);
  BivarPoly out = a;
  for (const auto& [j, r] : b.rows()) out.add_term(j, -r);
  return out;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  check_compatible(a, b);
  BivarPoly out(a.field(), a.frame());
  for (const auto& [i, r] : a.rows())
    for (const auto& [j, s] : b.rows()) out.add_term(i + j, r * s);
  return out;
}

BivarPoly shift_v(const BivarPoly& c, long k) {
  BivarPoly out(c.field(), c.frame());
  for (const auto& [j, r] : c.rows()) out.add_term(j + k, r);
  return out;
}

BivarPoly theta_to_x_frame(const BivarPoly& c) { return skew(c, 1).with_frame(CentralFrame::X); }

BivarPoly x_to_theta_frame(const BivarPoly& c) { return skew(c, -1).with_frame(CentralFrame::Theta); }

BivarPoly fourier_preimage(const BivarPoly& c) {
  const Field& f = c.field();
  BivarPoly out(f, c.frame());
  for (const auto& [b, row] : c.rows()) {
    if (b < 0) throw ArithmeticError("Fourier image of a Laurent polynomial");
    const u64 sign = (b % 2) ? f.p() - 1 : 1;
    for (std::size_t a = 0; a < row.size(); ++a)
      if (row[a] != 0)
        out.add_term(static_cast<long>(a), Poly::monomial(f, f.mul(sign, row[a]), static_cast<std::size_t>(b)));
  }
  return out;
}

BivarPoly fourier_image(const BivarPoly& c) {
  const Field& f = c.field();
  BivarPoly out(f, c.frame());
  for (const auto& [b, row] : c.rows()) {
    if (b < 0) throw ArithmeticError("Fourier image of a Laurent polynomial");
    for (std::size_t a = 0; a < row.size(); ++a) {
      if (row[a] == 0) continue;
      const u64 sign = (a % 2) ? f.p() - 1 : 1;
      out.add_term(static_cast<long>(a), Poly::monomial(f, f.mul(sign, row[a]), static_cast<std::size_t>(b)));
    }
  }
  return out;
}

std::string to_string(const BivarPoly& c) {
  if (c.is_zero()) return "0";
  const Field& f = c.field();
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rows().rbegin(); it != c.rows().rend(); ++it) {
    const long v = it->first;
    const Poly& row = it->second;
    for (std::size_t a = row.size(); a-- > 0;) {
      if (row[a] == 0) continue;
      const i64 sc = f.to_signed(row[a]);
      const u64 mag = static_cast<u64>(sc < 0 ? -sc : sc);
      if (first)
        os << (sc < 0 ? "-" : "");
      else
        os << (sc < 0 ? " - " : " + ");
      first = false;
      std::vector<std::string> parts;
      if (a > 0) parts.push_back(a == 1 ? "U" : "U^" + std::to_string(a));
      if (v != 0) parts.push_back(v == 1 ? "V" : "V^" + std::to_string(v));
      if (mag != 1 || parts.empty()) parts.insert(parts.begin(), std::to_string(mag));
      for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
    }
  }
  return os.str();
}

}  // namespace pcurv
