#pragma once

#include "pcurv/matrix.hpp"
#include "pcurv/series.hpp"

namespace pcurv {

struct HermiteForm {
  Mat<LaurentSeries> P;
  Mat<LaurentSeries> H;
};

/// mx = P * H with P unimodular (det P = 1) and H lower triangular, over
/// Laurent series with every entry first truncated to precision n.
///
/// Columns are cleared from the last one down; in each column the pivot is
/// the remaining entry of least valuation (lowest row index on ties), so all
/// elimination multipliers have nonnegative valuation. Throws PrecisionError
/// when a pivot column is indistinguishable from zero.
HermiteForm approx_hermite(const Mat<LaurentSeries>& mx, long n);

}  // namespace pcurv
