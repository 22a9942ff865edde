#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "cli.hpp"

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"waring"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream captured;
  auto* old = std::cout.rdbuf(captured.rdbuf());
  const int status = waring::cli::run(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  return {status, captured.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("count subcommand") {
  const auto r = run_cli({"count", "-k", "2", "-d", "2", "-N", "25"});
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
  const auto brute = run_cli({"count", "-k", "2", "-d", "2", "-N", "25", "--brute"});
  CHECK(brute.out == "2\n");
  const auto gen = run_cli({"count", "-k", "2", "-d", "2", "-N", "9", "--coeffs", "1,2"});
  CHECK(gen.status == 0);
  CHECK(gen.out == "1\n");  // 1*1 + 2*4 = 9
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"count", "-k", "1", "-d", "2", "-N", "5"}).status == 1);  // k >= 2
  CHECK(run_cli({"count", "-k", "2", "-d", "2"}).status == 1);            // missing -N
  CHECK(run_cli({"nonsense"}).status == 1);
  // capacity refusal is a computation error
  CHECK(run_cli({"count", "-k", "2", "-d", "12", "-N", "100000000", "--brute"}).status == 2);
  CHECK(run_cli({"--help"}).status == 0);
  CHECK(run_cli({"count", "--help"}).status == 0);
}

TEST_CASE("json output modes") {
  const auto r = run_cli({"gauss", "-k", "2", "-a", "1", "-q", "4", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"re\"") != std::string::npos);
  const auto s = run_cli({"singular", "-k", "2", "-d", "9", "-N", "10", "--Q", "200",
                          "--P", "20", "--format", "csv"});
  CHECK(s.status == 0);
  CHECK(s.out.find("truncatedSum") != std::string::npos);
}

TEST_CASE("scan emits csv rows") {
  const auto r = run_cli({"scan", "-k", "2", "-d", "5", "--N-from", "100", "--N-to",
                          "300", "--step", "100", "--format", "csv", "--Q", "200",
                          "--P", "20"});
  CHECK(r.status == 0);
  std::size_t lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 4);  // header + 3 rows
  CHECK(r.out.find("k,d,N,alpha,exactCount") == 0);
}

TEST_CASE("output file and reproducibility across thread counts") {
  const char* path = "cli_test_output.csv";
  const auto args = std::vector<std::string>{
      "scan", "-k", "2", "-d", "5", "--N-from", "200", "--N-to", "400", "--step",
      "200", "--format", "csv", "--Q", "150", "--P", "20", "-o", path};

  setenv("WARING_THREADS", "1", 1);
  const auto r1 = run_cli(args);
  std::ifstream f1(path);
  std::stringstream s1;
  s1 << f1.rdbuf();

  setenv("WARING_THREADS", "2", 1);
  const auto r2 = run_cli(args);
  std::ifstream f2(path);
  std::stringstream s2;
  s2 << f2.rdbuf();
  unsetenv("WARING_THREADS");

  CHECK(r1.status == 0);
  CHECK(r2.status == 0);
  CHECK(s1.str() == s2.str());
  CHECK(!s1.str().empty());
  std::remove(path);
}

TEST_CASE("bounds weyl_minor honors the seed") {
  const auto a = run_cli({"bounds", "--bound", "weyl_minor", "-k", "2", "-X", "32",
                          "--samples", "40", "--seed", "7", "--format", "csv"});
  const auto b = run_cli({"bounds", "--bound", "weyl_minor", "-k", "2", "-X", "32",
                          "--samples", "40", "--seed", "7", "--format", "csv"});
  const auto c = run_cli({"bounds", "--bound", "weyl_minor", "-k", "2", "-X", "32",
                          "--samples", "40", "--seed", "8", "--format", "csv"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("arcs helpers") {
  CHECK(run_cli({"arcs", "-k", "2", "-X", "16", "--dirichlet", "0.5"}).out == "1/2\n");
  CHECK(run_cli({"arcs", "-k", "2", "-X", "16", "--classify", "0.001"}).out == "major\n");
  CHECK(run_cli({"arcs", "-k", "2", "-X", "16", "--classify", "0.3"}).out == "minor\n");
}

TEST_SUITE_END();
