#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

// End-to-end runs of the installed binary. BRAIDINV_BIN is injected by the
// build so the tests always exercise the freshly built tool.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BRAIDINV_BIN) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("alex subcommand") {
  RunResult r = run("alex \"2: 1 1 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 - t + t^2\n");

  RunResult t34 = run("alex \"3: (2 1)x4\"");
  CHECK(t34.exit_code == 0);
  CHECK(t34.out == "1 - t + t^3 - t^5 + t^6\n");

  RunResult link = run("alex \"2: 1 1\"");
  CHECK(link.exit_code == 2);
  CHECK(link.out.find("link") != std::string::npos);

  RunResult bad = run("alex \"3: 5 1\"");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("out of range") != std::string::npos);
}

TEST_CASE("signature subcommand") {
  RunResult r = run("signature 2 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "closed_form=-12 gordon_litherland=-12\n");
}

TEST_CASE("goeritz subcommand") {
  RunResult r = run("goeritz 2 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("11 -1 -1 -1 -1 -1 -1 -5") != std::string::npos);
  CHECK(r.out.find("mu=11") != std::string::npos);
}

TEST_CASE("nf subcommand reports twist positivity") {
  RunResult r = run("nf \"3: (2 1)x4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("infimum=2") != std::string::npos);
  CHECK(r.out.find("twist_positive=yes") != std::string::npos);
  CHECK(r.out.find("gamma: 3: 2 1") != std::string::npos);

  RunResult plain = run("nf \"3: 1 2\"");
  CHECK(plain.out.find("twist_positive=no") != std::string::npos);
}

TEST_CASE("burau subcommand") {
  RunResult r = run("burau \"3: 2 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[ -t , 1 ]\n[ -t^2 , 0 ]\n");
}

TEST_CASE("family and report subcommands") {
  RunResult family = run("family 10");
  CHECK(family.exit_code == 0);
  CHECK(family.out.find("q=10 genus=9 tau=9 members=3") != std::string::npos);
  CHECK(family.out.find("T(3,7;6)") != std::string::npos);

  RunResult report = run("report 10");
  CHECK(report.exit_code == 0);
  CHECK(report.out.find("verdict: pairwise distinct (3 members)") !=
        std::string::npos);
  CHECK(report.out.find("fox-milnor-trace") != std::string::npos);

  RunResult csv = run("report 10 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("label,q,k,m,writhe,genus,tau,signature,verdict,"
                      "obstruction_used\n",
                      0) == 0);

  RunResult json = run("report 7 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"pairwise_distinct\": true") != std::string::npos);
}

TEST_CASE("verify subcommand is deterministic with exit code 0") {
  std::string args = "verify --q-max 13 --k-max 3 --m-max 3";
  RunResult first = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("[PASS] burau-golden") != std::string::npos);
  CHECK(first.out.find("0 failed") != std::string::npos);
  RunResult second = run(args);
  CHECK(first.out == second.out);
}
