#pragma once

#include <random>

#include "pcurv/ore.hpp"

namespace pcurv {

using Rng = std::mt19937_64;

inline Poly random_poly(Rng& rng, const Field& f, long deg) {
  std::uniform_int_distribution<u64> dist(0, f.p() - 1);
  std::vector<u64> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = dist(rng);
  return Poly(f, std::move(c));
}

/// sum_{j=lo..hi} c_j(x) d^j with deg c_j <= d and c_hi != 0.
template <class Op>
Op random_operator(Rng& rng, const Field& f, long d, long lo, long hi) {
  Op op(f);
  for (long j = lo; j < hi; ++j) op.add_term(j, random_poly(rng, f, d));
  Poly lead(f);
  while (lead.is_zero()) lead = random_poly(rng, f, d);
  op.add_term(hi, lead);
  return op;
}

inline OpXD random_x_operator(Rng& rng, const Field& f, long d, long r) {
  return random_operator<OpXD>(rng, f, d, 0, r);
}

}  // namespace pcurv
