#pragma once

#include <vector>

#include "pcurv/matrix.hpp"
#include "pcurv/series.hpp"

namespace pcurv {

/// Characteristic polynomial of a square matrix over F_p((Z)).
///
/// Entries must be known to precision n and every minor of m must have
/// valuation >= -v. Returns the r+1 coefficients of det(X Id - m), lowest
/// first, each at absolute precision exactly n - v. The leading one is 1.
///
/// Works in F_p((X)) with Z = X^(r+1): the Hermite form of X Id - m yields
/// the determinant, and the coefficient of X^(j + (r+1)k) is the Z^k term of
/// the X^j coefficient. Throws ContractError when a coefficient has
/// valuation below -v.
std::vector<LaurentSeries> charpoly(const Mat<LaurentSeries>& m, long n, long v);

}  // namespace pcurv
