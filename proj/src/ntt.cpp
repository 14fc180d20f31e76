#include "pcurv/ntt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>

#include "pcurv/error.hpp"

namespace pcurv::detail {
namespace {

using u32 = std::uint32_t;

constexpr std::size_t kMaxLog = 23;
constexpr std::size_t kMaxPrimes = 8;

u64 powmod_small(u64 a, u64 e, u64 q) {
  u64 r = 1;
  a %= q;
  while (e) {
    if (e & 1) r = r * a % q;
    a = a * a % q;
    e >>= 1;
  }
  return r;
}

u64 primitive_root(u64 q) {
  std::vector<u64> factors;
  u64 m = q - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 f : factors) {
      if (powmod_small(g, (q - 1) / f, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

u32 shoup(u32 w, u32 q) { return static_cast<u32>((static_cast<u64>(w) << 32) / q); }

// Twiddles of one butterfly level of length len = 2^lg: w^j and w^-j for
// j < len, w a primitive 2^(lg+1)-th root of unity, with Shoup companions
// floor(w * 2^32 / q).
struct Level {
  std::vector<u32> root, root_shoup, iroot, iroot_shoup;
};

struct PrimeTable {
  u32 q;
  u64 w;  // primitive 2^kMaxLog-th root of unity
  std::array<std::unique_ptr<Level>, kMaxLog> levels;
};

struct Tables {
  std::vector<PrimeTable> primes;
  // Garner constants: inv_prefix[i] = (q_0 ... q_{i-1})^-1 mod q_i.
  std::array<u32, kMaxPrimes> inv_prefix{};
  std::mutex mu;
};

Tables* build_tables() {
  auto* t = new Tables;
  const u64 step = u64{1} << kMaxLog;
  for (u64 c = ((u64{1} << 30) - 1) / step; c > 0 && t->primes.size() < kMaxPrimes; --c) {
    u64 q = c * step + 1;
    if (!is_prime(q)) continue;
    PrimeTable pt;
    pt.q = static_cast<u32>(q);
    pt.w = powmod_small(primitive_root(q), (q - 1) >> kMaxLog, q);
    t->primes.push_back(std::move(pt));
  }
  for (std::size_t i = 0; i < t->primes.size(); ++i) {
    u64 q = t->primes[i].q;
    u64 prod = 1;
    for (std::size_t j = 0; j < i; ++j) prod = prod * (t->primes[j].q % q) % q;
    t->inv_prefix[i] = static_cast<u32>(powmod_small(prod, q - 2, q));
  }
  return t;
}

Tables& tables() {
  static Tables* t = build_tables();
  return *t;
}

// Levels 0 .. log_n - 1 of every prime, built on first use. Built levels are
// never moved, so references stay valid.
void ensure_levels(std::size_t log_n) {
  Tables& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  for (auto& pt : t.primes) {
    const u64 q = pt.q;
    for (std::size_t lg = 0; lg < log_n; ++lg) {
      if (pt.levels[lg]) continue;
      auto lv = std::make_unique<Level>();
      const std::size_t len = std::size_t{1} << lg;
      const u64 w = powmod_small(pt.w, u64{1} << (kMaxLog - 1 - lg), q);
      const u64 wi = powmod_small(w, q - 2, q);
      lv->root.resize(len);
      lv->iroot.resize(len);
      lv->root_shoup.resize(len);
      lv->iroot_shoup.resize(len);
      u64 a = 1, b = 1;
      for (std::size_t k = 0; k < len; ++k) {
        lv->root[k] = static_cast<u32>(a);
        lv->iroot[k] = static_cast<u32>(b);
        lv->root_shoup[k] = shoup(lv->root[k], pt.q);
        lv->iroot_shoup[k] = shoup(lv->iroot[k], pt.q);
        a = a * w % q;
        b = b * wi % q;
      }
      pt.levels[lg] = std::move(lv);
    }
  }
}

inline u32 mul_shoup(u32 a, u32 w, u32 wp, u32 q) {
  u32 t = static_cast<u32>((static_cast<u64>(a) * wp) >> 32);
  u32 r = static_cast<u32>(a * w - t * q);
  return r >= q ? r - q : r;
}

// Decimation in frequency; output in bit-reversed order.
void forward(std::vector<u32>& a, std::size_t log_n, const PrimeTable& pt) {
  const std::size_t n = std::size_t{1} << log_n;
  const u32 q = pt.q;
  for (std::size_t len = n >> 1, lg = log_n - 1; len >= 1; len >>= 1, --lg) {
    const Level& lv = *pt.levels[lg];
    for (std::size_t i = 0; i < n; i += 2 * len) {
      u32* x = a.data() + i;
      u32* y = x + len;
      for (std::size_t j = 0; j < len; ++j) {
        u32 u = x[j], v = y[j];
        u32 s = u + v;
        x[j] = s >= q ? s - q : s;
        y[j] = mul_shoup(u + q - v, lv.root[j], lv.root_shoup[j], q);
      }
    }
    if (lg == 0) break;
  }
}

// Decimation in time from bit-reversed order, including the 1/n scaling.
void inverse(std::vector<u32>& a, std::size_t log_n, const PrimeTable& pt) {
  const std::size_t n = std::size_t{1} << log_n;
  const u32 q = pt.q;
  for (std::size_t len = 1, lg = 0; len < n; len <<= 1, ++lg) {
    const Level& lv = *pt.levels[lg];
    for (std::size_t i = 0; i < n; i += 2 * len) {
      u32* x = a.data() + i;
      u32* y = x + len;
      for (std::size_t j = 0; j < len; ++j) {
        u32 u = x[j];
        u32 v = mul_shoup(y[j], lv.iroot[j], lv.iroot_shoup[j], q);
        u32 s = u + v;
        x[j] = s >= q ? s - q : s;
        y[j] = u >= v ? u - v : u + q - v;
      }
    }
  }
  u32 ninv = static_cast<u32>(powmod_small(n % q, q - 2, q));
  u32 ninv_p = shoup(ninv, q);
  for (auto& x : a) x = mul_shoup(x >= q ? x - q : x, ninv, ninv_p, q);
}

std::vector<u64> garner(const Field& f, const std::vector<std::vector<u32>>& res,
                        std::size_t length) {
  const Tables& t = tables();
  const std::size_t k = res.size();
  const u64 p = f.p();
  // prefix_mod_p[i] = q_0 ... q_{i-1} mod p.
  std::array<u64, kMaxPrimes> prefix_mod_p{};
  prefix_mod_p[0] = 1 % p;
  for (std::size_t i = 1; i < k; ++i) prefix_mod_p[i] = f.mul(prefix_mod_p[i - 1], t.primes[i - 1].q % p);

  std::vector<u64> out(length);
  std::array<u64, kMaxPrimes> y{};
  for (std::size_t c = 0; c < length; ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      const u64 q = t.primes[i].q;
      // Evaluate the mixed-radix prefix y_0 + y_1 q_0 + ... modulo q_i.
      u64 acc = 0, radix = 1;
      for (std::size_t j = 0; j < i; ++j) {
        acc = (acc + y[j] * radix) % q;
        radix = radix * t.primes[j].q % q;
      }
      u64 r = res[i][c];
      y[i] = (r + q - acc) % q * t.inv_prefix[i] % q;
    }
    u64 v = 0;
    for (std::size_t i = 0; i < k; ++i) v = f.add(v, f.mul(y[i] % p, prefix_mod_p[i]));
    out[c] = v;
  }
  return out;
}

}  // namespace

std::size_t ntt_log_size(std::size_t length) {
  std::size_t lg = 0;
  while ((std::size_t{1} << lg) < length) ++lg;
  if (lg > kMaxLog) throw ArithmeticError("polynomial product too large for the NTT path");
  lg = std::max<std::size_t>(lg, 1);
  ensure_levels(lg);
  return lg;
}

std::size_t ntt_prime_count(u64 p, std::size_t terms) {
  const Tables& t = tables();
  long double need = 2.0L * std::log2(static_cast<long double>(p)) +
                     std::log2(static_cast<long double>(std::max<std::size_t>(terms, 1))) + 1.0L;
  long double have = 0;
  for (std::size_t i = 0; i < t.primes.size(); ++i) {
    have += std::log2(static_cast<long double>(t.primes[i].q - 1));
    if (have > need) return i + 1;
  }
  throw ArithmeticError("modulus too large for the NTT path");
}

NttOperand::NttOperand(const u64* a, std::size_t na, std::size_t log_size, std::size_t primes)
    : empty_(na == 0), data_(primes) {
  if (empty_) return;
  const Tables& t = tables();
  const std::size_t n = std::size_t{1} << log_size;
  for (std::size_t i = 0; i < primes; ++i) {
    auto& v = data_[i];
    v.assign(n, 0);
    const u32 q = t.primes[i].q;
    for (std::size_t j = 0; j < na; ++j) v[j] = static_cast<u32>(a[j] % q);
    forward(v, log_size, t.primes[i]);
  }
}

NttAccumulator::NttAccumulator(std::size_t log_size, std::size_t primes)
    : log_size_(log_size), primes_(primes), acc_(primes) {
  for (auto& v : acc_) v.assign(std::size_t{1} << log_size, 0);
}

void NttAccumulator::add_product(const NttOperand& a, const NttOperand& b) {
  if (a.empty() || b.empty()) return;
  const Tables& t = tables();
  // Residues are below 2^30, so fifteen products fit in the 64-bit accumulator.
  const bool flush = ++pending_ == 15;
  for (std::size_t i = 0; i < primes_; ++i) {
    const u64 q = t.primes[i].q;
    const auto& x = a.residues(i);
    const auto& y = b.residues(i);
    auto& z = acc_[i];
    const std::size_t n = z.size();
    for (std::size_t j = 0; j < n; ++j) z[j] += static_cast<u64>(x[j]) * y[j];
    if (flush)
      for (auto& v : z) v %= q;
  }
  if (flush) pending_ = 0;
}

std::vector<u64> NttAccumulator::finish(const Field& f, std::size_t length) {
  const Tables& t = tables();
  std::vector<std::vector<u32>> res(primes_);
  for (std::size_t i = 0; i < primes_; ++i) {
    const u64 q = t.primes[i].q;
    res[i].resize(acc_[i].size());
    for (std::size_t j = 0; j < acc_[i].size(); ++j) res[i][j] = static_cast<u32>(acc_[i][j] % q);
    inverse(res[i], log_size_, t.primes[i]);
  }
  return garner(f, res, length);
}

std::vector<u64> mul_ntt(const Field& f, const u64* a, std::size_t na, const u64* b,
                         std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  const std::size_t length = na + nb - 1;
  const std::size_t lg = ntt_log_size(length);
  const std::size_t k = ntt_prime_count(f.p(), std::min(na, nb));
  const Tables& t = tables();
  const std::size_t n = std::size_t{1} << lg;
  std::vector<std::vector<u32>> res(k);
  for (std::size_t i = 0; i < k; ++i) {
    const u64 q = t.primes[i].q;
    std::vector<u32> x(n, 0), y(n, 0);
    for (std::size_t j = 0; j < na; ++j) x[j] = static_cast<u32>(a[j] % q);
    for (std::size_t j = 0; j < nb; ++j) y[j] = static_cast<u32>(b[j] % q);
    forward(x, lg, t.primes[i]);
    forward(y, lg, t.primes[i]);
    for (std::size_t j = 0; j < n; ++j) x[j] = static_cast<u32>(static_cast<u64>(x[j]) * y[j] % q);
    inverse(x, lg, t.primes[i]);
    res[i] = std::move(x);
  }
  return garner(f, res, length);
}

}  // namespace pcurv::detail
