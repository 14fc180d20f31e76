#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "pcurv/json_io.hpp"
#include "pcurv/parse.hpp"
#include "pcurv/xi.hpp"

using namespace pcurv;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PCURV_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("xi command") {
  Result r = run("xi --p 7 --op 'd - 1'");
  CHECK(r.code == 0);
  CHECK(r.out == "V - 1\n");
  r = run("xi --p 5 --op 'x*d'");
  CHECK(r.out == "U*V\n");
  r = run("xi --p 5 --op 'd - t' --frame theta --algorithm both");
  CHECK(r.code == 0);
  CHECK(r.out == "V - U\n");
  for (int seed = 1; seed <= 5; ++seed) {
    r = run("xi --p 5 --op random --algorithm both --seed " + std::to_string(seed));
    CHECK(r.code == 0);
  }
}

TEST_CASE("JSON output parses back") {
  Field f(11);
  const std::string op = "(x^2 + 3)*d^2 - x*d + 4";
  Result r = run("xi --p 11 --json --op '" + op + "'");
  REQUIRE(r.code == 0);
  CHECK(bivar_from_json(r.out) == xi_x_d(parse_x_operator(op, f)));
}

TEST_CASE("nilpotent command") {
  CHECK(run("nilpotent --p 5 --op 'x*d'").out == "true\n");
  CHECK(run("nilpotent --p 5 --op 'd - 1'").out == "false\n");
  CHECK(run("nilpotent --p 7 --op 'd^2' --algorithm both").out == "true\n");
}

TEST_CASE("pcurvature command") {
  Result r = run("pcurvature --p 5 --op 'd - 1'");
  CHECK(r.code == 0);
  CHECK(r.out == "A[0][0] = 1\n");
}

TEST_CASE("bench command") {
  Result r = run("bench --bench-p 101,211 --d 2 --r 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p,seconds,peak_matrices\n101,", 0) == 0);
  CHECK(r.out.find("\n211,") != std::string::npos);
}

TEST_CASE("selftest command") {
  Result r = run("selftest --seed 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("seed 3\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("xi --p 8 --op d").code == 1);
  CHECK(run("xi --p 7 --op 'd +'").code == 1);
  CHECK(run("xi --p 7").code == 1);
  CHECK(run("xi --p 7 --op d --frame y").code == 1);
  CHECK(run("xi --p 101 --op 'd + x' --algorithm naive").code == 2);
  CHECK(run("xi --p 7 --op 0").code == 2);
  CHECK(run("nilpotent --p 7 --op x").code == 2);
}
