#include "pcurv/charpoly_series.hpp"

#include <stdexcept>

#include "pcurv/error.hpp"
#include "pcurv/hermite.hpp"

namespace pcurv {
namespace {

// Z ^ k -> X ^ (stride * k), treating the known coefficients as exact.
LaurentSeries spread(const LaurentSeries& s, long stride, long prec) {
  const Field& f = s.field();
  if (s.is_zero()) return LaurentSeries::zero(f, prec);
  const long val = s.val() * stride;
  if (val >= prec) return LaurentSeries::zero(f, prec);
  std::vector<u64> c(static_cast<std::size_t>(prec - val), 0);
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
    const long e = static_cast<long>(k) * stride;
    if (e >= prec - val) break;
    c[static_cast<std::size_t>(e)] = s.coeffs()[k];
  }
  return LaurentSeries::from_coeffs(f, val, std::move(c), prec);
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

std::vector<LaurentSeries> charpoly(const Mat<LaurentSeries>& m, long n, long v) {
  if (!m.is_square()) throw ArithmeticError("characteristic polynomial of a non-square matrix");
  if (v < 0) throw ContractError("valuation bound must be nonnegative");
  const Field f = m.zero().field();
  const long r = static_cast<long>(m.rows());
  const long out_prec = n - v;
  if (r == 0) return {LaurentSeries::monomial(f, 1, 0, out_prec)};

  Mat<LaurentSeries> lift(m.rows(), m.cols(), LaurentSeries::zero(f, n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).prec() < n) throw ContractError("matrix entry known below the stated precision");
      lift(i, j) = m(i, j).truncated(n);
    }

  const long k = r + 1;
  const long target = k * out_prec + r;
  long work = k * n + r;
  LaurentSeries det(f);
  for (int attempt = 0;; ++attempt) {
    if (attempt == 12) throw PrecisionError("characteristic polynomial: working precision exhausted");
    Mat<LaurentSeries> mx(m.rows(), m.cols(), LaurentSeries::zero(f, work));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        LaurentSeries e = -spread(lift(i, j), k, work);
        if (i == j) e = e + LaurentSeries::monomial(f, 1, 1, work);
        mx(i, j) = e;
      }
    try {
      HermiteForm hf = approx_hermite(mx, work);
      det = hf.H(0, 0);
      for (std::size_t i = 1; i < hf.H.rows(); ++i) det = det * hf.H(i, i);
    } catch (const PrecisionError&) {
      work *= 2;
      continue;
    }
    if (det.prec() >= target) break;
    work *= 2;
  }

  std::vector<std::vector<u64>> cs(static_cast<std::size_t>(k));
  std::vector<long> lows(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) {
    long low = std::min(floor_div(det.val() - j, k), out_prec);
    lows[static_cast<std::size_t>(j)] = low;
    cs[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(out_prec - low), 0);
  }
  for (std::size_t i = 0; i < det.coeffs().size(); ++i) {
    const long e = det.val() + static_cast<long>(i);
    if (e >= target) break;
    const long j = ((e % k) + k) % k;
    const long z = (e - j) / k;
    if (z >= out_prec) continue;
    const auto lj = static_cast<std::size_t>(j);
    cs[lj][static_cast<std::size_t>(z - lows[lj])] = det.coeffs()[i];
  }

  std::vector<LaurentSeries> out;
  out.reserve(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) {
    const auto lj = static_cast<std::size_t>(j);
    LaurentSeries c = LaurentSeries::from_coeffs(f, lows[lj], std::move(cs[lj]), out_prec);
    if (!c.is_zero() && c.val() < -v)
      throw ContractError("characteristic polynomial coefficient violates the valuation bound");
    out.push_back(std::move(c));
  }
  if (!(out.back() == LaurentSeries::monomial(f, 1, 0, out_prec)))
    throw std::logic_error("characteristic polynomial is not monic");
  return out;
}

}  // namespace pcurv
