#include "pcurv/field.hpp"

#include <string>

#include "pcurv/error.hpp"

namespace pcurv {
namespace {

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field::Field(u64 p)
    : p_(p),
      barrett_(p >= 2 && p < (u64{1} << 32) ? static_cast<u64>((static_cast<u128>(1) << 64) / p) : 0),
      r64_(p >= 2 ? static_cast<u64>((static_cast<u128>(1) << 64) % p) : 0) {
  if (p >= kMaxModulus) throw ArithmeticError("modulus " + std::to_string(p) + " exceeds 2^62");
  if (!is_prime(p)) throw ArithmeticError("modulus " + std::to_string(p) + " is not prime");
}

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a % p_ == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(p_));
  if (a == 1) return 1;
  return pow(a, p_ - 2);
}

u64 Field::from_int(i64 v) const {
  i64 m = static_cast<i64>(p_);
  i64 r = v % m;
  return static_cast<u64>(r < 0 ? r + m : r);
}

i64 Field::to_signed(u64 a) const {
  if (a > p_ / 2) return -static_cast<i64>(p_ - a);
  return static_cast<i64>(a);
}

}  // namespace pcurv
