#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pcurv/error.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

/// Dense row-major matrix over a commutative ring R.
///
/// R only needs +, -, * and equality; the matrix carries a zero element so
/// that empty products and fresh matrices can be built without knowing how
/// to construct one (a Poly needs its field, a series its precision).
template <class R>
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols, const R& zero)
      : rows_(rows), cols_(cols), zero_(zero), e_(rows * cols, zero) {}

  static Mat identity(std::size_t n, const R& zero, const R& one) {
    Mat m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const R& zero() const { return zero_; }

  R& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<R>& entries() { return e_; }
  const std::vector<R>& entries() const { return e_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_, cols_;
  R zero_;
  std::vector<R> e_;
};

/// Schoolbook product, O(n^3) ring multiplications.
template <class R>
Mat<R> mul_generic(const Mat<R>& a, const Mat<R>& b) {
  if (a.cols() != b.rows()) throw ArithmeticError("matrix dimension mismatch");
  Mat<R> c(a.rows(), b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const R& aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + aik * b(k, j);
    }
  return c;
}

template <class R>
Mat<R> operator*(const Mat<R>& a, const Mat<R>& b) {
  return mul_generic(a, b);
}

template <class R>
Mat<R> operator+(const Mat<R>& a, const Mat<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ArithmeticError("matrix dimension mismatch");
  Mat<R> c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] = a.entries()[i] + b.entries()[i];
  return c;
}

/// Polynomial matrices multiply through the transform domain once the entries
/// are long enough: each entry is transformed once instead of n times.
Mat<Poly> operator*(const Mat<Poly>& a, const Mat<Poly>& b);
/// a * b with every entry reduced mod x^m.
Mat<Poly> mul_trunc(const Mat<Poly>& a, const Mat<Poly>& b, std::size_t m);
Mat<Poly> truncated(const Mat<Poly>& a, std::size_t m);
/// B(x + s) entrywise.
Mat<Poly> shift(const Mat<Poly>& b, u64 s);
Mat<Poly> poly_identity(Field f, std::size_t n);

/// ms[0] * ms[1] * ... by pairwise products level by level, so that factors
/// of a level have comparable size. Consumes the list.
template <class R>
Mat<R> product_chain(std::vector<Mat<R>> ms, const Mat<R>& identity) {
  if (ms.empty()) return identity;
  for (const auto& m : ms)
    if (!m.is_square() || m.rows() != identity.rows())
      throw ArithmeticError("matrix dimension mismatch in product chain");
  while (ms.size() > 1) {
    std::vector<Mat<R>> next;
    next.reserve((ms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < ms.size(); i += 2) {
      next.push_back(ms[i] * ms[i + 1]);
      ms[i] = Mat<R>(0, 0, ms[i].zero());
      ms[i + 1] = Mat<R>(0, 0, ms[i].zero());
    }
    if (ms.size() % 2) next.push_back(std::move(ms.back()));
    ms = std::move(next);
  }
  return std::move(ms.front());
}

/// Coefficients of det(X Id - m), lowest degree first, by Berkowitz's
/// division-free algorithm.
template <class R>
std::vector<R> berkowitz_charpoly(const Mat<R>& m, const R& one) {
  if (!m.is_square()) throw ArithmeticError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const R zero = m.zero();
  // Highest degree first while building.
  std::vector<R> cp{one};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t s = k - 1;  // size of the leading block already handled
    // t = [1, -a, -R C, -R A C, ..., -R A^(s-1) C]
    std::vector<R> t;
    t.reserve(k + 1);
    t.push_back(one);
    t.push_back(zero - m(s, s));
    std::vector<R> col(s, zero);
    for (std::size_t i = 0; i < s; ++i) col[i] = m(i, s);
    for (std::size_t pw = 0; pw < s; ++pw) {
      R acc = zero;
      for (std::size_t i = 0; i < s; ++i) acc = acc + m(s, i) * col[i];
      t.push_back(zero - acc);
      if (pw + 1 < s) {
        std::vector<R> nc(s, zero);
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) nc[i] = nc[i] + m(i, j) * col[j];
        col = std::move(nc);
      }
    }
    std::vector<R> next(k + 1, zero);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j < cp.size() && j <= i; ++j) next[i] = next[i] + t[i - j] * cp[j];
    cp = std::move(next);
  }
  return std::vector<R>(cp.rbegin(), cp.rend());
}

}  // namespace pcurv
