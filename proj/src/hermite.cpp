#include "pcurv/hermite.hpp"

#include <utility>

namespace pcurv {

HermiteForm approx_hermite(const Mat<LaurentSeries>& mx, long n) {
  if (!mx.is_square()) throw ArithmeticError("Hermite form of a non-square matrix");
  const std::size_t r = mx.rows();
  const Field f = mx.zero().field();
  const LaurentSeries zero = LaurentSeries::zero(f, n);

  Mat<LaurentSeries> h(r, r, zero);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) h(i, j) = mx(i, j).truncated(n);
  Mat<LaurentSeries> p = Mat<LaurentSeries>::identity(r, zero, LaurentSeries::monomial(f, 1, 0, n));

  for (std::size_t j = r; j-- > 0;) {
    std::size_t piv = r;
    for (std::size_t i = 0; i <= j; ++i) {
      if (h(i, j).is_zero()) continue;
      if (piv == r || h(i, j).val() < h(piv, j).val()) piv = i;
    }
    if (piv == r) throw PrecisionError("insufficient precision: pivot column vanishes");

    if (piv != j) {
      // Rows (j, piv) <- (piv, -j) keeps det = 1; P absorbs the inverse on columns.
      for (std::size_t c = 0; c < r; ++c) {
        LaurentSeries t = h(j, c);
        h(j, c) = h(piv, c);
        h(piv, c) = -t;
      }
      for (std::size_t c = 0; c < r; ++c) {
        LaurentSeries t = p(c, j);
        p(c, j) = p(c, piv);
        p(c, piv) = -t;
      }
    }

    const LaurentSeries pinv = inv(h(j, j));
    for (std::size_t i = 0; i < j; ++i) {
      if (h(i, j).is_zero()) continue;
      const LaurentSeries q = h(i, j) * pinv;
      for (std::size_t c = 0; c <= j; ++c) h(i, c) = h(i, c) - q * h(j, c);
      for (std::size_t c = 0; c < r; ++c) p(c, j) = p(c, j) + q * p(c, i);
    }
  }
  return {std::move(p), std::move(h)};
}

}  // namespace pcurv
