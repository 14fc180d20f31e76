#pragma once

#include <cstddef>

#include "pcurv/matrix.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

/// Fact(B, s) = B(theta) B(theta + 1) ... B(theta + s - 1), every result mod theta^m.

struct FactorialOptions {
  /// Giant-step counts below this reduce each point by a direct Taylor shift;
  /// from here on a remainder tree over the moduli (theta - s i)^m is used.
  std::size_t tree_threshold = 24;
};

/// Matrices held by the baby-step/giant-step code, for memory reporting.
struct FactorialStats {
  std::size_t live = 0;
  std::size_t peak = 0;
};
FactorialStats factorial_stats();
void reset_factorial_stats();

/// Sequential product; the reference implementation.
Mat<Poly> naive_factorial(const Mat<Poly>& b, u64 s, std::size_t m);
/// Fact(B, s^2) with s baby steps and s giant steps.
Mat<Poly> factorial_square(const Mat<Poly>& b, u64 s, std::size_t m,
                           const FactorialOptions& opts = {});
/// Fact(B, s) for any s, from blocks of length 4^k following the base-4 digits of s.
Mat<Poly> factorial(const Mat<Poly>& b, u64 s, std::size_t m, const FactorialOptions& opts = {});

/// Psi with g(theta) g(theta + 1) ... g(theta + p - 1) = Psi(theta^p - theta):
/// lc(g) times the characteristic polynomial of multiplication by
/// eta^p - eta on F_p[eta]/(g).
Poly scalar_central_factorial(const Poly& g);

namespace detail {
/// c(theta + a_i) mod theta^m for every point, via the remainder tree or directly.
std::vector<Poly> shifted_remainders(const Poly& c, const std::vector<u64>& points, std::size_t m,
                                     bool use_tree);
/// The same for several polynomials sharing one tree.
std::vector<std::vector<Poly>> shifted_remainders(const std::vector<Poly>& cs,
                                                  const std::vector<u64>& points, std::size_t m,
                                                  bool use_tree);
}  // namespace detail

}  // namespace pcurv
