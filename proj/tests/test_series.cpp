#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcurv/error.hpp"
#include "pcurv/series.hpp"
#include "support.hpp"

using namespace pcurv;
using pcurv::test::Rng;

namespace {

LaurentSeries S(const Field& f, long val, std::vector<i64> c, long prec) {
  std::vector<u64> v;
  for (i64 x : c) v.push_back(f.from_int(x));
  return LaurentSeries::from_coeffs(f, val, v, prec);
}

}  // namespace

TEST_CASE("precision rules on the documented examples") {
  Field f(7);
  LaurentSeries a = S(f, -1, {1}, 2);
  LaurentSeries b = S(f, 1, {1}, 4);
  LaurentSeries ab = a * b;
  CHECK(ab == S(f, 0, {1}, 3));

  LaurentSeries c = inv(S(f, 0, {1, 1}, 3));
  CHECK(c == S(f, 0, {1, -1, 1}, 3));

  LaurentSeries z = S(f, 1, {1}, 5) + S(f, 1, {-1}, 3);
  CHECK(z.is_zero());
  CHECK(z.prec() == 3);
  CHECK(z.val() == 3);
}

TEST_CASE("embedding polynomials") {
  Field f(11);
  LaurentSeries s = LaurentSeries::from_poly(Poly::monomial(f, 1, 2), 5);
  CHECK(s.val() == 2);
  CHECK(s.prec() == 5);
  CHECK(s.coeff(2) == 1);
  CHECK(s.coeff(4) == 0);
  CHECK_THROWS_AS(s.coeff(5), PrecisionError);

  LaurentSeries z = LaurentSeries::from_poly(Poly(f), 3);
  CHECK(z.is_zero());
  CHECK(z.prec() == 3);

  LaurentSeries t = LaurentSeries::from_poly(Poly::from_ints(f, {1, 0, 0, 0, 0, 0, 0, 1}), 4);
  CHECK(t == S(f, 0, {1}, 4));
  CHECK(t.to_poly() == Poly::constant(f, 1));
}

TEST_CASE("zero is absorbing and precision-aware") {
  Field f(5);
  LaurentSeries z = LaurentSeries::zero(f, 4);
  LaurentSeries a = S(f, -2, {1, 2, 3}, 6);
  LaurentSeries za = z * a;
  CHECK(za.is_zero());
  CHECK(za.prec() == 2);
  CHECK_THROWS_AS(inv(z), PrecisionError);
  CHECK((a - a).is_zero());
  CHECK((a - a).prec() == 6);
}

TEST_CASE("inverse and multiplication properties") {
  Rng rng(21);
  for (u64 p : {2, 7, 1000003}) {
    Field f(p);
    for (int it = 0; it < 50; ++it) {
      long val = test::rand_int(rng, -5, 5);
      long prec = val + test::rand_int(rng, 1, 20);
      LaurentSeries a = test::rand_series(rng, f, val, prec);
      LaurentSeries one = a * inv(a);
      CHECK(one.prec() == a.relprec());
      CHECK(one == LaurentSeries::monomial(f, 1, 0, a.relprec()));

      LaurentSeries b = test::rand_series(rng, f, test::rand_int(rng, -5, 5),
                                          test::rand_int(rng, 6, 20));
      LaurentSeries ab = a * b;
      CHECK(ab.prec() == std::min(a.val() + b.prec(), b.val() + a.prec()));
      CHECK((a + b).prec() == std::min(a.prec(), b.prec()));
      CHECK(inv(a).val() == -a.val());
      CHECK(inv(a).relprec() == a.relprec());
    }
  }
}

TEST_CASE("embedding is a ring morphism up to precision") {
  Rng rng(22);
  Field f(13);
  for (int it = 0; it < 40; ++it) {
    Poly a = test::rand_poly(rng, f, 12), b = test::rand_poly(rng, f, 12);
    long n = test::rand_int(rng, 1, 30);
    auto ea = LaurentSeries::from_poly(a, n), eb = LaurentSeries::from_poly(b, n);
    CHECK((ea * eb).prec() >= n);
    CHECK((ea * eb).truncated(n) == LaurentSeries::from_poly(a * b, n));
    CHECK(ea + eb == LaurentSeries::from_poly(a + b, n));
  }
}

TEST_CASE("rational function expansion") {
  Field f(7);
  // 1/(Z - Z^2) = Z^-1 (1 + Z + Z^2 + ...)
  RatFn r(Poly::constant(f, 1), Poly::from_ints(f, {0, 1, -1}));
  auto s = LaurentSeries::from_ratfn(r, 3);
  CHECK(s == S(f, -1, {1, 1, 1, 1}, 3));
  auto back = s * LaurentSeries::from_poly(Poly::from_ints(f, {0, 1, -1}), 10);
  CHECK(back == S(f, 0, {1}, 4));
}

TEST_CASE("composition") {
  for (u64 p : {5, 7, 13}) {
    Field f(p);
    const long e = static_cast<long>(p);
    std::vector<u64> t(static_cast<std::size_t>(e), 0);
    t[1] = p - 1;
    LaurentSeries tz = LaurentSeries::from_coeffs(f, 0, t, e);
    CHECK(series_compose_trunc(Poly::variable(f), tz + S(f, p, {-1}, 3 * e), e) == S(f, 1, {-1}, e));
    CHECK(series_compose_trunc(Poly::constant(f, 3), tz, e) == S(f, 0, {3}, e));
    CHECK(series_compose_trunc(Poly::monomial(f, 1, 2), S(f, 1, {-1}, e), e) == S(f, 2, {1}, e));
  }
  Field f(5);
  CHECK_THROWS_AS(series_compose_trunc(Poly::variable(f), S(f, 0, {1, 1}, 4), 4), ArithmeticError);
}
