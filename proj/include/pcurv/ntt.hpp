#pragma once

// Multi-modular number-theoretic transform for products over an arbitrary F_p.
// Inputs are lifted to integers, multiplied modulo a few 30-bit NTT primes and
// recombined with Garner's algorithm before reducing mod p.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pcurv/field.hpp"

namespace pcurv::detail {

/// Number of 30-bit primes whose product exceeds terms * (p-1)^2.
std::size_t ntt_prime_count(u64 p, std::size_t terms);

/// Full product of two coefficient arrays.
std::vector<u64> mul_ntt(const Field& f, const u64* a, std::size_t na, const u64* b,
                         std::size_t nb);

/// Transformed operand for repeated products: one forward transform per prime.
class NttOperand {
 public:
  NttOperand() = default;
  NttOperand(const u64* a, std::size_t na, std::size_t log_size, std::size_t primes);

  bool empty() const { return empty_; }
  const std::vector<std::uint32_t>& residues(std::size_t prime) const { return data_[prime]; }
  std::vector<std::uint32_t>& residues(std::size_t prime) { return data_[prime]; }

 private:
  bool empty_ = true;
  std::vector<std::vector<std::uint32_t>> data_;
};

/// Accumulates pointwise products in the transform domain and maps the sum back.
class NttAccumulator {
 public:
  NttAccumulator(std::size_t log_size, std::size_t primes);
  void add_product(const NttOperand& a, const NttOperand& b);
  /// Inverse transforms and returns the coefficients mod p, trimmed to `length`.
  std::vector<u64> finish(const Field& f, std::size_t length);

 private:
  std::size_t log_size_;
  std::size_t primes_;
  std::vector<std::vector<std::uint64_t>> acc_;
  std::size_t pending_ = 0;
};

std::size_t ntt_log_size(std::size_t length);

}  // namespace pcurv::detail
