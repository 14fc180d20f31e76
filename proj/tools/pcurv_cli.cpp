// pcurv: characteristic polynomial of the p-curvature from the command line.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcurv/convert.hpp"
#include "pcurv/error.hpp"
#include "pcurv/json_io.hpp"
#include "pcurv/oracle.hpp"
#include "pcurv/parse.hpp"
#include "pcurv/random.hpp"
#include "pcurv/xi.hpp"

using namespace pcurv;

namespace {

enum Exit { kOk = 0, kUsage = 1, kComputation = 2, kMismatch = 3 };

struct Request {
  u64 p = 0;
  std::string op;
  std::string frame = "x";
  std::string algorithm = "fast";
  bool json = false;
  u64 seed = 1;
  long d = 2, r = 2;
  std::vector<u64> bench_p;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Field make_field(u64 p) {
  try {
    return Field(p);
  } catch (const ArithmeticError& e) {
    throw UsageError(e.what());
  }
}

// Parsed operator text, or a random operator of the requested shape.
template <class Op>
Op read_operator(const Request& req, const Field& f) {
  if (req.op == "random") {
    Rng rng(req.seed);
    Op op = random_operator<Op>(rng, f, req.d, 0, req.r);
    std::cerr << "seed " << req.seed << ": " << to_string(op) << "\n";
    return op;
  }
  if constexpr (std::is_same_v<Op, OpXD>)
    return parse_x_operator(req.op, f);
  else
    return parse_theta_operator(req.op, f);
}

void print(const BivarPoly& c, bool json) { std::cout << (json ? to_json(c) : to_string(c)) << "\n"; }

BivarPoly naive_theta(const OpThetaD& l) {
  if (l.field().p() <= kAzumayaMaxPrime) return azumaya_norm(l);
  return x_to_theta_frame(xi_naive(theta_d_to_x_d(l)));
}

int run_xi(const Request& req) {
  const Field f = make_field(req.p);
  std::optional<BivarPoly> fast, naive;
  if (req.frame == "x") {
    const OpXD l = read_operator<OpXD>(req, f);
    if (req.algorithm != "naive") fast = l.low() < 0 ? xi_x_d(l) : xi_auto(l);
    if (req.algorithm != "fast") naive = xi_naive(l);
  } else {
    const OpThetaD l = read_operator<OpThetaD>(req, f);
    if (req.algorithm != "naive") fast = xi_theta_d(l);
    if (req.algorithm != "fast") naive = naive_theta(l);
  }
  if (fast && naive && !(*fast == *naive)) {
    std::cerr << "mismatch\n  fast:  " << to_string(*fast) << "\n  naive: " << to_string(*naive) << "\n";
    return kMismatch;
  }
  print(fast ? *fast : *naive, req.json);
  return kOk;
}

int run_nilpotent(const Request& req) {
  const Field f = make_field(req.p);
  const OpXD l = read_operator<OpXD>(req, f);
  std::optional<bool> fast, naive;
  if (req.algorithm != "naive") fast = is_nilpotent(l);
  if (req.algorithm != "fast") {
    if (l.is_zero() || l.low() < 0 || l.high() < 1) throw ArithmeticError("nilpotency needs order at least 1");
    const BivarPoly c = xi_naive(l);
    naive = c.rows().size() == 1 && c.v_low() == l.high();
  }
  if (fast && naive && *fast != *naive) {
    std::cerr << "mismatch: fast " << *fast << ", naive " << *naive << "\n";
    return kMismatch;
  }
  const bool v = fast ? *fast : *naive;
  if (req.json)
    std::cout << nlohmann::json{{"p", req.p}, {"nilpotent", v}}.dump() << "\n";
  else
    std::cout << (v ? "true" : "false") << "\n";
  return kOk;
}

int run_pcurvature(const Request& req) {
  const Field f = make_field(req.p);
  const OpXD l = read_operator<OpXD>(req, f);
  const Mat<RatFn> a = katz_pcurvature(l);
  if (req.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
      rows.push_back(row);
    }
    std::cout << nlohmann::json{{"p", req.p}, {"A_p", rows}}.dump() << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      std::cout << "A[" << i << "][" << j << "] = " << to_string(a(i, j)) << "\n";
  return kOk;
}

int run_bench(const Request& req) {
  if (req.bench_p.empty()) throw UsageError("bench needs --bench-p");
  std::cout << "p,seconds,peak_matrices\n";
  for (u64 p : req.bench_p) {
    const Field f = make_field(p);
    Rng rng(req.seed);
    const OpXD l = random_x_operator(rng, f, req.d, req.r);
    reset_factorial_stats();
    const auto t0 = std::chrono::steady_clock::now();
    const BivarPoly c = xi_x_d(l);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.v_degree() != req.r) throw std::logic_error("degree in d^p differs from the order");
    std::cout << p << "," << s << "," << factorial_stats().peak << "\n";
  }
  return kOk;
}

int run_selftest(const Request& req) {
  std::cout << "seed " << req.seed << "\n";
  Rng rng(req.seed);
  long total = 0, bad = 0;
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    const Field f(p);
    long cases = 0, fails = 0;
    for (int it = 0; it < 20; ++it) {
      const long d = std::uniform_int_distribution<long>(0, 3)(rng);
      const long r = std::uniform_int_distribution<long>(1, 3)(rng);
      const OpXD l = random_x_operator(rng, f, d, r);
      ++cases;
      if (!(xi_auto(l) == xi_naive(l))) {
        ++fails;
        std::cerr << "mismatch at p = " << p << ": " << to_string(l) << "\n";
      }
      if (p <= kAzumayaMaxPrime) {
        const OpThetaD t = random_operator<OpThetaD>(rng, f, 2, -1, 2);
        ++cases;
        if (!(xi_theta_d(t) == azumaya_norm(t))) {
          ++fails;
          std::cerr << "mismatch at p = " << p << ": " << to_string(t) << "\n";
        }
      }
    }
    std::cout << "p = " << p << ": " << cases - fails << "/" << cases << " agree\n";
    total += cases;
    bad += fails;
  }
  std::cout << (bad == 0 ? "ok" : "FAILED") << " (" << total << " cases)\n";
  return bad == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic polynomial of the p-curvature of differential operators over F_p."};
  app.require_subcommand(1);
  Request req;

  auto add_common = [&](CLI::App* sub, bool needs_op) {
    sub->add_option("--p", req.p, "prime modulus")->required();
    auto* op = sub->add_option("--op", req.op, "operator text, or 'random'");
    if (needs_op) op->required();
    sub->add_option("--seed", req.seed, "seed for random operators");
    sub->add_option("--d", req.d, "coefficient degree of random operators")->check(CLI::NonNegativeNumber);
    sub->add_option("--r", req.r, "order of random operators")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", req.json, "JSON output");
  };
  auto add_algorithm = [&](CLI::App* sub) {
    sub->add_option("--algorithm", req.algorithm, "fast, naive or both")
        ->check(CLI::IsMember({"fast", "naive", "both"}));
  };

  auto* xi = app.add_subcommand("xi", "print C(U, V) with Xi(L) = C(U, V)");
  add_common(xi, true);
  add_algorithm(xi);
  xi->add_option("--frame", req.frame, "x (U = x^p) or theta (U = t^p - t)")
      ->check(CLI::IsMember({"x", "theta"}));

  auto* nil = app.add_subcommand("nilpotent", "decide whether the p-curvature is nilpotent");
  add_common(nil, true);
  add_algorithm(nil);

  auto* pc = app.add_subcommand("pcurvature", "print the p-curvature matrix (small p)");
  add_common(pc, true);

  auto* bench = app.add_subcommand("bench", "time xi over several primes, CSV output");
  bench->add_option("--bench-p", req.bench_p, "comma separated primes")->delimiter(',')->required();
  bench->add_option("--seed", req.seed, "seed for the random operator");
  bench->add_option("--d", req.d, "coefficient degree")->check(CLI::NonNegativeNumber);
  bench->add_option("--r", req.r, "order")->check(CLI::NonNegativeNumber);

  auto* self = app.add_subcommand("selftest", "compare fast and naive results on random operators");
  self->add_option("--seed", req.seed, "corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*xi) return run_xi(req);
    if (*nil) return run_nilpotent(req);
    if (*pc) return run_pcurvature(req);
    if (*bench) return run_bench(req);
    return run_selftest(req);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
}
