#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>

#include "pcurv/charpoly_series.hpp"
#include "pcurv/hermite.hpp"
#include "pcurv/matrix.hpp"
#include "pcurv/ratfn.hpp"
#include "support.hpp"

using namespace pcurv;
using pcurv::test::Rng;

namespace {

using PolyMat = Mat<Poly>;

PolyMat rand_poly_mat(Rng& rng, const Field& f, std::size_t n, long deg) {
  PolyMat m(n, n, Poly(f));
  for (auto& e : m.entries()) e = test::rand_poly(rng, f, deg);
  return m;
}

// Laplace expansion along the first row; independent of Berkowitz.
template <class R>
R cofactor_det(const Mat<R>& m, const R& one) {
  const std::size_t n = m.rows();
  if (n == 0) return one;
  R acc = m.zero();
  for (std::size_t c = 0; c < n; ++c) {
    Mat<R> minor(n - 1, n - 1, m.zero());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    R term = m(0, c) * cofactor_det(minor, one);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// det(X Id - m) with X adjoined as a polynomial variable over the constant entries.
std::vector<u64> charpoly_by_cofactors(const Mat<u64>& m, const Field& f) {
  const std::size_t n = m.rows();
  Mat<Poly> xm(n, n, Poly(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      xm(i, j) = Poly::constant(f, f.neg(m(i, j)));
      if (i == j) xm(i, j) += Poly::variable(f);
    }
  Poly d = cofactor_det(xm, Poly::constant(f, 1));
  std::vector<u64> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = d[i];
  return out;
}

LaurentSeries one_series(const Field& f, long prec) { return LaurentSeries::monomial(f, 1, 0, prec); }

}  // namespace

TEST_CASE("matrix products") {
  Field f(7);
  PolyMat id = poly_identity(f, 2);
  Rng rng(31);
  PolyMat m = rand_poly_mat(rng, f, 2, 3);
  CHECK(id * m == m);

  PolyMat a(2, 2, Poly(f)), b(2, 2, Poly(f)), c(2, 2, Poly(f));
  a(0, 0) = a(1, 1) = Poly::variable(f);
  b(0, 0) = Poly::constant(f, 1);
  b(1, 1) = Poly::constant(f, 2);
  c(0, 0) = Poly::variable(f);
  c(1, 1) = Poly::monomial(f, 2, 1);
  CHECK(a * b == c);

  PolyMat x = rand_poly_mat(rng, f, 3, 4), y = rand_poly_mat(rng, f, 3, 4);
  PolyMat z(3, 3, Poly(f));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) z(i, j) += x(i, k) * y(k, j);
  CHECK(x * y == z);
  CHECK_THROWS_AS(x * PolyMat(2, 2, Poly(f)), ArithmeticError);
}

TEST_CASE("transform-domain product agrees with schoolbook") {
  Rng rng(32);
  for (u64 p : std::vector<u64>{11, 1000003, (u64{1} << 61) - 1}) {
    Field f(p);
    for (std::size_t n : {2u, 5u}) {
      PolyMat a = rand_poly_mat(rng, f, n, 300), b = rand_poly_mat(rng, f, n, 200);
      a(0, 1) = Poly(f);
      CHECK(a * b == mul_generic(a, b));
    }
  }
}

TEST_CASE("truncated product") {
  Rng rng(33);
  for (u64 p : std::vector<u64>{2, 4294967291ull, 4294967311ull, (u64{1} << 61) - 1}) {
    Field f(p);
    for (std::size_t m : {1u, 4u, 9u, 64u, 80u}) {
      PolyMat a = rand_poly_mat(rng, f, 3, 12), b = rand_poly_mat(rng, f, 3, 70);
      CHECK(mul_trunc(a, b, m) == truncated(mul_generic(a, b), m));
    }
  }
}

TEST_CASE("product chain") {
  Field f(5);
  Rng rng(33);
  PolyMat id = poly_identity(f, 2);
  PolyMat a = rand_poly_mat(rng, f, 2, 2), b = rand_poly_mat(rng, f, 2, 2);
  CHECK(product_chain<Poly>({a}, id) == a);
  CHECK(product_chain<Poly>({a, id, b}, id) == a * b);
  CHECK(product_chain<Poly>({}, id) == id);
  for (std::size_t len : {2u, 7u, 8u, 13u}) {
    std::vector<PolyMat> ms;
    PolyMat fold = id;
    for (std::size_t i = 0; i < len; ++i) {
      ms.push_back(rand_poly_mat(rng, f, 2, 3));
      fold = mul_generic(fold, ms.back());
    }
    CHECK(product_chain(ms, id) == fold);
  }
}

TEST_CASE("berkowitz examples") {
  Field f(7);
  Poly one = Poly::constant(f, 1);
  Mat<Poly> a(1, 1, Poly(f));
  a(0, 0) = Poly::constant(f, 3);
  auto cp = berkowitz_charpoly(a, one);
  REQUIRE(cp.size() == 2);
  CHECK(cp[0] == Poly::constant(f, 4));
  CHECK(cp[1] == one);

  Mat<Poly> s(2, 2, Poly(f));
  s(0, 1) = s(1, 0) = one;
  cp = berkowitz_charpoly(s, one);
  CHECK(cp == std::vector<Poly>{Poly::constant(f, 6), Poly(f), one});

  CHECK(berkowitz_charpoly(Mat<Poly>(0, 0, Poly(f)), one) == std::vector<Poly>{one});
}

TEST_CASE("berkowitz against cofactor expansion") {
  Rng rng(34);
  Field f(7);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = static_cast<std::size_t>(test::rand_int(rng, 1, 4));
    Mat<u64> m(n, n, 0);
    Mat<Poly> mp(n, n, Poly(f));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = test::rand_elem(rng, f);
        mp(i, j) = Poly::constant(f, m(i, j));
      }
    auto cp = berkowitz_charpoly(mp, Poly::constant(f, 1));
    auto expect = charpoly_by_cofactors(m, f);
    for (std::size_t i = 0; i <= n; ++i) CHECK(cp[i] == Poly::constant(f, expect[i]));
  }
}

TEST_CASE("berkowitz on triangular matrices") {
  Rng rng(35);
  Field f(13);
  Poly one = Poly::constant(f, 1);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = static_cast<std::size_t>(test::rand_int(rng, 1, 5));
    Mat<Poly> m(n, n, Poly(f));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) m(i, j) = test::rand_poly(rng, f, 2);
    // prod (X - m_ii) with X a new variable, expanded over F_p[x].
    std::vector<Poly> expect{one};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Poly> next(expect.size() + 1, Poly(f));
      for (std::size_t k = 0; k < expect.size(); ++k) {
        next[k + 1] += expect[k];
        next[k] -= expect[k] * m(i, i);
      }
      expect = next;
    }
    CHECK(berkowitz_charpoly(m, one) == expect);
  }
}

TEST_CASE("hermite examples") {
  Field f(7);
  const long n = 10;
  LaurentSeries zero = LaurentSeries::zero(f, n), one = one_series(f, n);
  auto id = Mat<LaurentSeries>::identity(2, zero, one);
  HermiteForm h = approx_hermite(id, n);
  CHECK(h.P == id);
  CHECK(h.H == id);

  Mat<LaurentSeries> s(2, 2, zero);
  s(0, 1) = s(1, 0) = one;
  h = approx_hermite(s, n);
  CHECK(h.H(0, 1).is_zero());
  CHECK((h.H(0, 0) * h.H(1, 1)).agrees_with(-one));
  CHECK(mul_generic(h.P, h.H) == s);

  Mat<LaurentSeries> z(2, 2, zero);
  z(0, 0) = one;
  CHECK_THROWS_AS(approx_hermite(z, n), PrecisionError);
}

TEST_CASE("hermite reconstruction and determinant") {
  Rng rng(36);
  Field f(11);
  const long n = 12;
  for (int it = 0; it < 40; ++it) {
    std::size_t r = static_cast<std::size_t>(test::rand_int(rng, 1, 4));
    Mat<LaurentSeries> m(r, r, LaurentSeries::zero(f, n));
    Mat<Poly> mp(r, r, Poly(f));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        mp(i, j) = test::rand_poly(rng, f, 3);
        if (test::rand_int(rng, 0, 2) == 0) mp(i, j) = mp(i, j).shifted_up(1);
        m(i, j) = LaurentSeries::from_poly(mp(i, j), n);
      }
    Poly d = cofactor_det(mp, Poly::constant(f, 1));
    if (d.is_zero()) continue;
    std::optional<HermiteForm> ho;
    try {
      ho = approx_hermite(m, n);
    } catch (const PrecisionError&) {
      continue;
    }
    const HermiteForm& h = *ho;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) CHECK(h.H(i, j).is_zero());
    auto back = mul_generic(h.P, h.H);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) CHECK(back(i, j).agrees_with(m(i, j)));
    LaurentSeries diag = h.H(0, 0);
    for (std::size_t i = 1; i < r; ++i) diag = diag * h.H(i, i);
    CHECK(diag.agrees_with(LaurentSeries::from_poly(d, n)));
    // P is unimodular: its determinant is a unit of valuation zero.
    Mat<LaurentSeries> pc = h.P;
    LaurentSeries dp = cofactor_det(pc, one_series(f, n));
    CHECK(dp.agrees_with(one_series(f, n)));
  }
}

TEST_CASE("series charpoly examples") {
  Field f(7);
  Mat<LaurentSeries> c(1, 1, LaurentSeries::zero(f, 5));
  c(0, 0) = LaurentSeries::monomial(f, 3, 0, 5);
  auto cp = charpoly(c, 5, 0);
  REQUIRE(cp.size() == 2);
  CHECK(cp[0] == LaurentSeries::monomial(f, 4, 0, 5));
  CHECK(cp[1] == one_series(f, 5));

  Mat<LaurentSeries> z(1, 1, LaurentSeries::zero(f, 3));
  z(0, 0) = LaurentSeries::monomial(f, 1, -1, 3);
  cp = charpoly(z, 3, 1);
  CHECK(cp[0] == LaurentSeries::monomial(f, 6, -1, 2));
  CHECK(cp[1] == one_series(f, 2));

  CHECK_THROWS_AS(charpoly(z, 3, 0), ContractError);
  CHECK(charpoly(Mat<LaurentSeries>(0, 0, LaurentSeries::zero(f, 4)), 4, 0).size() == 1);
}

TEST_CASE("series charpoly against Berkowitz over polynomials") {
  Rng rng(37);
  Field f(13);
  const long n = 10;
  for (int it = 0; it < 30; ++it) {
    std::size_t r = static_cast<std::size_t>(test::rand_int(rng, 1, 3));
    Mat<LaurentSeries> m(r, r, LaurentSeries::zero(f, n));
    Mat<Poly> mp(r, r, Poly(f));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        mp(i, j) = test::rand_poly(rng, f, 4);
        m(i, j) = LaurentSeries::from_poly(mp(i, j), n);
      }
    auto cp = charpoly(m, n, 0);
    auto expect = berkowitz_charpoly(mp, Poly::constant(f, 1));
    REQUIRE(cp.size() == r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      CHECK(cp[i].prec() == n);
      CHECK(cp[i] == LaurentSeries::from_poly(expect[i], n));
    }
  }
}
