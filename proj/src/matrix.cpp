#include "pcurv/matrix.hpp"

#include <algorithm>

#include "pcurv/ntt.hpp"

namespace pcurv {
namespace {

// Below this entry length the per-entry transforms do not pay off.
constexpr std::size_t kTransformThreshold = 24;
// Truncation orders up to this use the dense product when p < 2^32, where a
// u128 accumulator holds any sum of products without overflow.
constexpr std::size_t kDenseTruncLimit = 64;

std::size_t max_entry_size(const Mat<Poly>& a) {
  std::size_t n = 0;
  for (const auto& e : a.entries()) n = std::max(n, e.size());
  return n;
}

// Schoolbook entries summed in u128 before a single reduction; p < 2^32.
Mat<Poly> mul_dense(const Mat<Poly>& a, const Mat<Poly>& b, std::size_t na, std::size_t nb) {
  const Field f = a.zero().field();
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  Mat<Poly> c(rows, cols, Poly(f));
  if (na == 0 || nb == 0) return c;
  std::vector<u128> acc(na + nb - 1);
  std::vector<u64> out(na + nb - 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      std::size_t len = 0;
      for (std::size_t k = 0; k < inner; ++k) {
        const Poly& x = a(i, k);
        const Poly& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        const u64* xs = x.coeffs().data();
        const u64* ys = y.coeffs().data();
        for (std::size_t u = 0; u < x.size(); ++u)
          for (std::size_t v = 0; v < y.size(); ++v) acc[u + v] += static_cast<u128>(xs[u] * ys[v]);
        len = std::max(len, x.size() + y.size() - 1);
      }
      if (len == 0) continue;
      out.resize(len);
      for (std::size_t u = 0; u < len; ++u) out[u] = f.reduce(acc[u]);
      c(i, j) = Poly(f, out);
      out.resize(na + nb - 1);
    }
  return c;
}

}  // namespace

Mat<Poly> operator*(const Mat<Poly>& a, const Mat<Poly>& b) {
  if (a.cols() != b.rows()) throw ArithmeticError("matrix dimension mismatch");
  const std::size_t na = max_entry_size(a), nb = max_entry_size(b);
  if (a.cols() < 2 || std::min(na, nb) < kTransformThreshold) {
    if (a.zero().field().p() < (u64{1} << 32)) return mul_dense(a, b, na, nb);
    return mul_generic(a, b);
  }

  const Field f = a.zero().field();
  const std::size_t length = na + nb - 1;
  const std::size_t lg = detail::ntt_log_size(length);
  const std::size_t primes = detail::ntt_prime_count(f.p(), std::min(na, nb) * a.cols());

  std::vector<detail::NttOperand> ta, tb;
  ta.reserve(a.entries().size());
  tb.reserve(b.entries().size());
  for (const auto& e : a.entries()) ta.emplace_back(e.coeffs().data(), e.size(), lg, primes);
  for (const auto& e : b.entries()) tb.emplace_back(e.coeffs().data(), e.size(), lg, primes);

  Mat<Poly> c(a.rows(), b.cols(), Poly(f));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      detail::NttAccumulator acc(lg, primes);
      bool any = false;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const auto& x = ta[i * a.cols() + k];
        const auto& y = tb[k * b.cols() + j];
        if (x.empty() || y.empty()) continue;
        acc.add_product(x, y);
        any = true;
      }
      if (any) c(i, j) = Poly(f, acc.finish(f, length));
    }
  }
  return c;
}

Mat<Poly> truncated(const Mat<Poly>& a, std::size_t m) {
  Mat<Poly> c = a;
  for (auto& e : c.entries()) e = e.truncated(m);
  return c;
}

Mat<Poly> mul_trunc(const Mat<Poly>& a, const Mat<Poly>& b, std::size_t m) {
  if (a.cols() != b.rows()) throw ArithmeticError("matrix dimension mismatch");
  const Field f = a.zero().field();
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  Mat<Poly> c(rows, cols, Poly(f));
  if (m == 0) return c;
  if (m > kDenseTruncLimit || f.p() >= (u64{1} << 32)) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Poly acc(f);
        for (std::size_t k = 0; k < inner; ++k) acc += mul_trunc(a(i, k), b(k, j), m);
        c(i, j) = std::move(acc);
      }
    return c;
  }
  // Dense layout, n x n x m, with one u128 accumulator per output coefficient.
  auto flatten = [m](const Mat<Poly>& x) {
    std::vector<u64> d(x.entries().size() * m, 0);
    for (std::size_t e = 0; e < x.entries().size(); ++e) {
      const Poly& q = x.entries()[e];
      std::copy_n(q.coeffs().begin(), std::min(q.size(), m), d.begin() + static_cast<std::ptrdiff_t>(e * m));
    }
    return d;
  };
  const std::vector<u64> da = flatten(a), db = flatten(b);
  std::vector<u128> acc(m);
  std::vector<u64> out(m);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < inner; ++k) {
        const u64* x = &da[(i * inner + k) * m];
        const u64* y = &db[(k * cols + j) * m];
        for (std::size_t u = 0; u < m; ++u) {
          if (x[u] == 0) continue;
          for (std::size_t v = 0; u + v < m; ++v) acc[u + v] += static_cast<u128>(x[u]) * y[v];
        }
      }
      for (std::size_t u = 0; u < m; ++u) out[u] = f.reduce(acc[u]);
      c(i, j) = Poly(f, out);
    }
  return c;
}

Mat<Poly> shift(const Mat<Poly>& b, u64 s) {
  Mat<Poly> c = b;
  const u64 a = s % b.zero().field().p();
  if (a == 0) return c;
  for (auto& e : c.entries()) e = taylor_shift(e, a);
  return c;
}

Mat<Poly> poly_identity(Field f, std::size_t n) {
  return Mat<Poly>::identity(n, Poly(f), Poly::constant(f, 1));
}

}  // namespace pcurv
