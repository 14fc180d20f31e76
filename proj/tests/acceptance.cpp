// Acceptance run: one PASS/FAIL line per check, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "pcurv/charpoly_series.hpp"
#include "pcurv/convert.hpp"
#include "pcurv/factorial.hpp"
#include "pcurv/oracle.hpp"
#include "pcurv/random.hpp"
#include "pcurv/xi.hpp"
#include "support.hpp"

using namespace pcurv;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  long checks = 0;

  void check(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

long rand_long(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::string tag(u64 p, int it) { return "p=" + std::to_string(p) + " case " + std::to_string(it); }

// C(x^p, d^p) as an operator with rational coefficients.
OpRatXD as_operator(const BivarPoly& c) {
  const Field& f = c.field();
  OpRatXD out(f);
  for (const auto& [j, row] : c.rows()) {
    std::vector<u64> v(row.size() == 0 ? 0 : (row.size() - 1) * f.p() + 1, 0);
    for (std::size_t a = 0; a < row.size(); ++a) v[a * f.p()] = row[a];
    out.add_term(j * static_cast<long>(f.p()), RatFn(Poly(f, v)));
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  Rng rng(1001);
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    Field f(p);
    for (int it = 0; it < 50; ++it) {
      OpXD l = random_x_operator(rng, f, rand_long(rng, 0, 4), rand_long(rng, 1, 4));
      out.check(xi_x_d(l) == xi_naive(l), tag(p, it));
    }
  }
  return out;
}

Outcome azumaya_cross() {
  Outcome out;
  Rng rng(1002);
  for (u64 p : {2, 3, 5}) {
    Field f(p);
    for (int it = 0; it < 20; ++it) {
      auto l = random_operator<OpThetaD>(rng, f, rand_long(rng, 0, 2), 0, rand_long(rng, 0, 2));
      out.check(azumaya_norm(l) == xi_theta_d(l), tag(p, it));
    }
  }
  return out;
}

Outcome comparison_square() {
  Outcome out;
  Rng rng(1003);
  for (u64 p : {3, 5, 7}) {
    Field f(p);
    for (int it = 0; it < 20; ++it) {
      const long lo = rand_long(rng, -2, 0);
      const long hi = lo + rand_long(rng, 0, 3);
      auto l = random_operator<OpThetaD>(rng, f, rand_long(rng, 0, 3), lo, hi);
      out.check(theta_to_x_frame(xi_theta_d(l)) == xi_naive(theta_d_to_x_d(l)), tag(p, it));
    }
  }
  return out;
}

Outcome structural() {
  Outcome out;
  Rng rng(1004);
  for (u64 p : {2, 3, 5, 7}) {
    Field f(p);
    for (int it = 0; it < 20; ++it) {
      const long d1 = rand_long(rng, 0, 3), r1 = rand_long(rng, 0, 3);
      const long d2 = rand_long(rng, 0, 3), r2 = rand_long(rng, 0, 3);
      OpXD a = random_x_operator(rng, f, d1, r1), b = random_x_operator(rng, f, d2, r2);
      const BivarPoly ca = xi_x_d(a), cb = xi_x_d(b);
      out.check(xi_x_d(a * b) == ca * cb, "multiplicativity " + tag(p, it));
      out.check(ca.v_degree() == a.high(), "V-degree " + tag(p, it));
      out.check(ca.u_degree() <= coeff_degree(a), "U-degree " + tag(p, it));

      auto u = random_operator<OpThetaD>(rng, f, rand_long(rng, 0, 2), 0, rand_long(rng, 0, 3));
      auto w = random_operator<OpThetaD>(rng, f, rand_long(rng, 0, 2), 0, rand_long(rng, 0, 3));
      out.check(xi_theta_d(u * w) == xi_theta_d(u) * xi_theta_d(w),
                "theta multiplicativity " + tag(p, it));

      if (r1 >= 1) {
        const OpRatXD big = as_operator(ca);
        out.check(right_divrem(big, to_rational(a)).second.is_zero(), "right division " + tag(p, it));
      }
    }
  }
  return out;
}

Mat<Poly> rand_mat(Rng& rng, const Field& f, std::size_t n, long deg) {
  Mat<Poly> m(n, n, Poly(f));
  for (auto& e : m.entries()) e = test::rand_poly(rng, f, deg);
  return m;
}

Outcome factorial_suite() {
  Outcome out;
  Rng rng(1005);
  const std::size_t kMaxM = 8;
  const u64 kMaxS = 200;
  const FactorialOptions tree{1};
  for (u64 p : {11, 13}) {
    Field f(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      const Mat<Poly> b = rand_mat(rng, f, n, 2);
      // prefix[s] = Fact(B, s) mod theta^8, built one factor at a time.
      std::vector<Mat<Poly>> prefix{poly_identity(f, n)};
      for (u64 s = 0; s < kMaxS; ++s) prefix.push_back(mul_trunc(prefix.back(), shift(b, s), kMaxM));
      for (u64 s : {0, 1, 7, 64, 200})
        out.check(naive_factorial(b, s, kMaxM) == prefix[s], "prefix products");
      for (std::size_t m = 1; m <= kMaxM; ++m) {
        const std::string where = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                  " m=" + std::to_string(m);
        for (u64 s = 0; s <= kMaxS; ++s) {
          const Mat<Poly> expect = truncated(prefix[s], m);
          out.check(factorial(b, s, m) == expect, "factorial " + where + " s=" + std::to_string(s));
          out.check(factorial(b, s, m, tree) == expect,
                    "factorial (tree) " + where + " s=" + std::to_string(s));
        }
        for (u64 t = 0; t * t <= kMaxS; ++t) {
          const Mat<Poly> expect = truncated(prefix[t * t], m);
          out.check(factorial_square(b, t, m) == expect, "factorial_square " + where);
          out.check(factorial_square(b, t, m, tree) == expect, "factorial_square (tree) " + where);
        }
      }
    }
    for (int it = 0; it < 20; ++it) {
      const std::size_t n = static_cast<std::size_t>(rand_long(rng, 1, 3));
      const std::size_t m = static_cast<std::size_t>(rand_long(rng, 1, 8));
      const Mat<Poly> b = rand_mat(rng, f, n, 2);
      const u64 s = static_cast<u64>(rand_long(rng, 0, 200)), t = static_cast<u64>(rand_long(rng, 0, 200));
      out.check(factorial(b, s + t, m) == mul_trunc(factorial(b, s, m), factorial(shift(b, s), t, m), m),
                "splitting " + tag(p, it));
    }
  }
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    Field f(p);
    for (int it = 0; it < 20; ++it) {
      const Poly g = test::rand_poly_exact(rng, f, rand_long(rng, 0, 4));
      Poly literal = Poly::constant(f, 1);
      for (u64 i = 0; i < p; ++i) literal = literal * taylor_shift(g, i);
      out.check(compose_central(scalar_central_factorial(g)) == literal, "scalar factorial " + tag(p, it));
    }
  }
  return out;
}

// Z-adic valuation of a nonzero rational function.
long valuation(const RatFn& r) {
  auto low = [](const Poly& q) {
    long k = 0;
    while (q[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
  };
  return low(r.num()) - low(r.den());
}

RatFn cofactor_det(const Mat<RatFn>& m) {
  const std::size_t n = m.rows();
  const Field& f = m.zero().field();
  if (n == 0) return RatFn(Poly::constant(f, 1));
  RatFn det(f);
  for (std::size_t c = 0; c < n; ++c) {
    Mat<RatFn> minor(n - 1, n - 1, m.zero());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const RatFn term = m(0, c) * cofactor_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// Smallest valuation over all minors of every size; 0 when all vanish or are integral.
long minor_bound(const Mat<RatFn>& m) {
  const std::size_t n = m.rows();
  long low = 0;
  for (unsigned rs = 1; rs < (1u << n); ++rs)
    for (unsigned cs = 1; cs < (1u << n); ++cs) {
      if (__builtin_popcount(rs) != __builtin_popcount(cs)) continue;
      std::vector<std::size_t> ri, ci;
      for (std::size_t i = 0; i < n; ++i) {
        if (rs >> i & 1) ri.push_back(i);
        if (cs >> i & 1) ci.push_back(i);
      }
      Mat<RatFn> sub(ri.size(), ri.size(), m.zero());
      for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j) sub(i, j) = m(ri[i], ci[j]);
      const RatFn det = cofactor_det(sub);
      if (!det.is_zero()) low = std::min(low, valuation(det));
    }
  return -low;
}

Outcome series_charpoly() {
  Outcome out;
  Rng rng(1006);
  const u64 primes[] = {2, 3, 7, 13, 101, 65537};
  int singular = 0;
  for (int it = 0; it < 100; ++it) {
    const u64 p = primes[it % 6];
    Field f(p);
    const std::size_t r = static_cast<std::size_t>(rand_long(rng, 1, 3));
    Mat<RatFn> exact(r, r, RatFn(f));
    for (auto& e : exact.entries()) {
      Poly unit = test::rand_poly(rng, f, 2);
      std::vector<u64> c(unit.coeffs());
      if (c.empty()) c.push_back(0);
      c[0] = test::rand_nonzero(rng, f);
      const Poly den = Poly::monomial(f, 1, static_cast<std::size_t>(rand_long(rng, 0, 2))) * Poly(f, c);
      e = RatFn(test::rand_poly(rng, f, 3), den);
    }
    const long v = minor_bound(exact);
    if (v > 0) ++singular;
    const long n = v + rand_long(rng, 1, 8);
    Mat<LaurentSeries> m(r, r, LaurentSeries::zero(f, n));
    for (std::size_t i = 0; i < r * r; ++i) m.entries()[i] = LaurentSeries::from_ratfn(exact.entries()[i], n);
    const auto got = charpoly(m, n, v);
    const auto expect = berkowitz_charpoly(exact, RatFn(Poly::constant(f, 1)));
    out.check(got.size() == r + 1, "coefficient count, " + tag(p, it));
    if (got.size() != r + 1) continue;
    for (std::size_t i = 0; i <= r; ++i) {
      out.check(got[i].prec() == n - v, "precision, " + tag(p, it));
      out.check(got[i] == LaurentSeries::from_ratfn(expect[i], n - v), "coefficient, " + tag(p, it));
    }
  }
  if (out.ok) out.detail = std::to_string(singular) + " matrices with v > 0";
  return out;
}

u64 first_prime_from(u64 n) {
  while (!is_prime(n)) ++n;
  return n;
}

double min_time(const std::vector<OpXD>& ops, int reps) {
  double best = 1e300;
  for (int k = 0; k < reps; ++k) {
    const auto t0 = Clock::now();
    for (const auto& l : ops) (void)xi_x_d(l);
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

Outcome scaling() {
  Outcome out;
  std::vector<double> times;
  std::string summary;
  for (u64 target : {1000, 4000, 16000, 64000}) {
    const u64 p = first_prime_from(target);
    Field f(p);
    Rng rng(1007);
    std::vector<OpXD> ops;
    for (int i = 0; i < 3; ++i) ops.push_back(random_x_operator(rng, f, 5, 5));
    (void)xi_x_d(ops[0]);
    times.push_back(min_time(ops, 5));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%llu:%.3fs", summary.empty() ? "" : " ",
                  static_cast<unsigned long long>(p), times.back());
    summary += buf;
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double ratio = times[i] / times[i - 1];
    char buf[48];
    std::snprintf(buf, sizeof buf, " x%.2f", ratio);
    summary += buf;
    out.check(ratio <= 3.0, "ratio above 3.0");
  }
  out.detail = out.ok ? summary : out.detail + " (" + summary + ")";
  return out;
}

Outcome large_prime() {
  Outcome out;
  Field f(120011);
  Rng rng(1008);
  OpXD l = random_x_operator(rng, f, 5, 5);
  const BivarPoly c = xi_x_d(l);
  out.check(c.v_degree() == 5, "V-degree");
  out.check(c.u_degree() <= 5, "U-degree");
  const bool nil = is_nilpotent(l);
  if (out.ok) out.detail = std::string("nilpotent=") + (nil ? "yes" : "no");
  return out;
}

Outcome fourier_dispatch() {
  Outcome out;
  Rng rng(1009);
  for (u64 p : {5, 7, 11}) {
    Field f(p);
    for (int it = 0; it < 50; ++it) {
      OpXD l = random_x_operator(rng, f, rand_long(rng, 0, 4), rand_long(rng, 0, 4));
      out.check(xi_auto(l) == xi_x_d(l), tag(p, it));
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Check {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Check> all = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "Azumaya norm", azumaya_cross},
      {3, "comparison square", comparison_square},
      {4, "structural properties", structural},
      {5, "factorial suite", factorial_suite},
      {6, "series charpoly", series_charpoly},
      {7, "scaling in p", scaling},
      {8, "large prime", large_prime},
      {9, "Fourier dispatch", fourier_dispatch},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double dt = seconds_since(t0);
    if (!o.ok) ++failed;
    std::printf("%s %d %s: %ld checks, %.1f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.checks, dt,
                o.detail.empty() ? "" : "; ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
