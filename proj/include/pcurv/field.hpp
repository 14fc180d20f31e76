#pragma once

#include <cstdint>

namespace pcurv {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n);

/// The prime field F_p. Elements are plain integers in [0, p).
///
/// The modulus is validated at construction (prime, below 2^62). Two fields
/// compare equal iff they have the same modulus.
class Field {
 public:
  static constexpr u64 kMaxModulus = u64{1} << 62;

  explicit Field(u64 p);

  u64 p() const { return p_; }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const {
    if (barrett_ != 0) return reduce_small(a * b);
    return static_cast<u64>(static_cast<u128>(a) * b % p_);
  }
  u64 reduce(u128 x) const {
    if (barrett_ == 0) return static_cast<u64>(x % p_);
    const u64 hi = reduce_small(static_cast<u64>(x >> 64));
    return add(reduce_small(hi * r64_), reduce_small(static_cast<u64>(x)));
  }
  u64 pow(u64 a, u64 e) const;
  /// Throws ArithmeticError on zero.
  u64 inv(u64 a) const;
  u64 from_int(i64 v) const;
  /// Centered representative in (-p/2, p/2].
  i64 to_signed(u64 a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  // Barrett reduction of any 64-bit value with floor(2^64 / p); the quotient
  // estimate is short by at most one.
  u64 reduce_small(u64 x) const {
    const u64 q = static_cast<u64>((static_cast<u128>(x) * barrett_) >> 64);
    const u64 r = x - q * p_;
    return r >= p_ ? r - p_ : r;
  }

  u64 p_;
  u64 barrett_;  // floor(2^64 / p) for p < 2^32, else 0
  u64 r64_;      // 2^64 mod p when barrett_ is set
};

}  // namespace pcurv
