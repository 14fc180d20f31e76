#include "pcurv/factorial.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <utility>

#include "pcurv/error.hpp"

namespace pcurv {
namespace {

std::atomic<std::size_t> g_live{0};
std::atomic<std::size_t> g_peak{0};

void hold(std::size_t n) {
  const std::size_t now = g_live += n;
  std::size_t peak = g_peak.load();
  while (now > peak && !g_peak.compare_exchange_weak(peak, now)) {
  }
}

void release(std::size_t n) { g_live -= std::min(n, g_live.load()); }

// Below this quotient length plain division beats the cached-inverse product.
constexpr std::size_t kTreeNewtonThreshold = 1024;

// Subproduct tree over the moduli; level 0 holds the moduli themselves.
class RemainderTree {
 public:
  RemainderTree(const Field& f, const std::vector<u64>& points, std::size_t m) {
    std::vector<Node> leaves;
    leaves.reserve(points.size());
    for (u64 a : points) leaves.push_back(Node{linear_power(f, a, m), Poly(f)});
    levels_.push_back(std::move(leaves));
    while (levels_.back().size() > 1) {
      const auto& prev = levels_.back();
      std::vector<Node> next;
      next.reserve((prev.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < prev.size(); i += 2)
        next.push_back(Node{prev[i].mod * prev[i + 1].mod, Poly(f)});
      if (prev.size() % 2) next.push_back(Node{prev.back().mod, Poly(f)});
      levels_.push_back(std::move(next));
    }
  }

  std::vector<Poly> reduce(const Poly& c) {
    std::vector<Poly> cur{reduce_one(c, levels_.back()[0])};
    for (std::size_t lv = levels_.size() - 1; lv-- > 0;) {
      auto& nodes = levels_[lv];
      std::vector<Poly> next;
      next.reserve(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) next.push_back(reduce_one(cur[i / 2], nodes[i]));
      cur = std::move(next);
    }
    return cur;
  }

 private:
  struct Node {
    Poly mod;
    Poly rev_inv;  // inverse of the reversed modulus, to the longest precision asked so far
  };

  static Poly reduce_one(const Poly& c, Node& node) {
    const Poly& mod = node.mod;
    if (c.size() < mod.size()) return c;
    const std::size_t nq = c.size() - mod.size() + 1;
    if (nq < kTreeNewtonThreshold || mod.size() < kTreeNewtonThreshold) return c % mod;
    if (node.rev_inv.size() < nq) node.rev_inv = inv_trunc(mod.reversed(mod.size()), nq);
    const Poly rq = mul_trunc(c.reversed(c.size()).truncated(nq), node.rev_inv.truncated(nq), nq);
    const Poly q = rq.reversed(nq);
    return c.truncated(mod.size() - 1) - mul_trunc(q, mod, mod.size() - 1);
  }

  std::vector<std::vector<Node>> levels_;
};

Mat<Poly> truncated_identity(const Field& f, std::size_t n, std::size_t m) {
  return truncated(poly_identity(f, n), m);
}

}  // namespace

FactorialStats factorial_stats() { return {g_live.load(), g_peak.load()}; }

void reset_factorial_stats() {
  g_live = 0;
  g_peak = 0;
}

namespace detail {

std::vector<std::vector<Poly>> shifted_remainders(const std::vector<Poly>& cs,
                                                  const std::vector<u64>& points, std::size_t m,
                                                  bool use_tree) {
  std::vector<std::vector<Poly>> out(cs.size());
  if (cs.empty()) return out;
  std::optional<RemainderTree> tree;
  if (use_tree && !points.empty()) tree.emplace(cs[0].field(), points, m);
  for (std::size_t e = 0; e < cs.size(); ++e) {
    auto& row = out[e];
    row.reserve(points.size());
    if (!tree) {
      for (u64 a : points) row.push_back(taylor_shift_trunc(cs[e], a, m));
      continue;
    }
    std::vector<Poly> rems = tree->reduce(cs[e]);
    for (std::size_t i = 0; i < points.size(); ++i) row.push_back(taylor_shift_trunc(rems[i], points[i], m));
  }
  return out;
}

std::vector<Poly> shifted_remainders(const Poly& c, const std::vector<u64>& points, std::size_t m,
                                     bool use_tree) {
  return std::move(shifted_remainders(std::vector<Poly>{c}, points, m, use_tree)[0]);
}

}  // namespace detail

Mat<Poly> naive_factorial(const Mat<Poly>& b, u64 s, std::size_t m) {
  if (!b.is_square()) throw ArithmeticError("factorial of a non-square matrix");
  const Field f = b.zero().field();
  Mat<Poly> acc = truncated_identity(f, b.rows(), m);
  for (u64 i = 0; i < s; ++i) acc = mul_trunc(acc, truncated(shift(b, i), m), m);
  return acc;
}

Mat<Poly> factorial_square(const Mat<Poly>& b, u64 s, std::size_t m, const FactorialOptions& opts) {
  if (!b.is_square()) throw ArithmeticError("factorial of a non-square matrix");
  const Field f = b.zero().field();
  const std::size_t n = b.rows();
  if (s == 0 || m == 0 || n == 0) return truncated_identity(f, n, m);

  std::vector<Mat<Poly>> baby;
  baby.reserve(s);
  for (u64 i = 0; i < s; ++i) baby.push_back(shift(b, i));
  hold(s);
  Mat<Poly> c = product_chain(std::move(baby), poly_identity(f, n));
  release(s - 1);

  std::vector<u64> points(s);
  for (u64 i = 0; i < s; ++i) points[i] = f.mul(s % f.p(), i % f.p());
  const bool tree = s >= opts.tree_threshold;

  std::vector<Mat<Poly>> giant(s, Mat<Poly>(n, n, Poly(f)));
  hold(s);
  std::vector<std::vector<Poly>> rs = detail::shifted_remainders(c.entries(), points, m, tree);
  c = Mat<Poly>(0, 0, Poly(f));
  for (std::size_t e = 0; e < n * n; ++e)
    for (u64 i = 0; i < s; ++i) giant[i].entries()[e] = std::move(rs[e][i]);
  release(1);

  Mat<Poly> acc = std::move(giant[0]);
  for (u64 i = 1; i < s; ++i) {
    acc = mul_trunc(acc, giant[i], m);
    giant[i] = Mat<Poly>(0, 0, Poly(f));
  }
  release(s);
  return acc;
}

Mat<Poly> factorial(const Mat<Poly>& b, u64 s, std::size_t m, const FactorialOptions& opts) {
  if (!b.is_square()) throw ArithmeticError("factorial of a non-square matrix");
  const Field f = b.zero().field();
  Mat<Poly> acc = truncated_identity(f, b.rows(), m);
  if (s == 0) return acc;

  std::vector<unsigned> digits;
  for (u64 t = s; t > 0; t /= 4) digits.push_back(static_cast<unsigned>(t % 4));
  u64 offset = 0;
  for (std::size_t k = digits.size(); k-- > 0;) {
    const u64 side = u64{1} << k;  // a block of length 4^k is Fact(., side^2)
    for (unsigned c = 0; c < digits[k]; ++c) {
      Mat<Poly> block = factorial_square(shift(b, offset), side, m, opts);
      acc = mul_trunc(acc, block, m);
      offset += side * side;
    }
  }
  return acc;
}

Poly scalar_central_factorial(const Poly& g) {
  if (g.is_zero()) throw ArithmeticError("central factorial of the zero polynomial");
  const Field& f = g.field();
  const long n = g.degree();
  if (n == 0) return g;
  const Poly eta = Poly::variable(f);
  const Poly s = (powmod(eta, f.p(), g) - eta) % g;

  const auto dim = static_cast<std::size_t>(n);
  Mat<Poly> mult(dim, dim, Poly(f));
  Poly col = s;
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < dim; ++i) mult(i, k) = Poly::constant(f, col[i]);
    col = (col * eta) % g;
  }
  std::vector<Poly> cp = berkowitz_charpoly(mult, Poly::constant(f, 1));
  std::vector<u64> out(cp.size());
  for (std::size_t i = 0; i < cp.size(); ++i) out[i] = f.mul(cp[i][0], g.lead());
  return Poly(f, std::move(out));
}

}  // namespace pcurv
