#pragma once

#include <random>
#include <vector>

#include "pcurv/poly.hpp"
#include "pcurv/series.hpp"

namespace pcurv::test {

using Rng = std::mt19937_64;

inline u64 rand_elem(Rng& rng, const Field& f) {
  return std::uniform_int_distribution<u64>(0, f.p() - 1)(rng);
}

inline u64 rand_nonzero(Rng& rng, const Field& f) {
  return std::uniform_int_distribution<u64>(1, f.p() - 1)(rng);
}

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random polynomial of degree at most deg (may be lower or zero).
inline Poly rand_poly(Rng& rng, const Field& f, long deg) {
  std::vector<u64> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = rand_elem(rng, f);
  return Poly(f, c);
}

/// Random polynomial of degree exactly deg.
inline Poly rand_poly_exact(Rng& rng, const Field& f, long deg) {
  std::vector<u64> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = rand_elem(rng, f);
  c.back() = rand_nonzero(rng, f);
  return Poly(f, c);
}

inline LaurentSeries rand_series(Rng& rng, const Field& f, long val, long prec) {
  std::vector<u64> c(static_cast<std::size_t>(prec - val));
  for (auto& x : c) x = rand_elem(rng, f);
  if (!c.empty()) c[0] = rand_nonzero(rng, f);
  return LaurentSeries::from_coeffs(f, val, c, prec);
}

}  // namespace pcurv::test
