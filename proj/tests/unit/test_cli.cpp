#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "mtrace/suites.hpp"

using namespace mtrace;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MTRACE_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), int(buf.size()), p)) out += buf.data();
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("invariant subcommand") {
  CHECK(run("invariant --which t0x2a --strands 2 --braid \"1 1 1\"").out == "0\n");
  CHECK(run("invariant --which parity --strands 2 --braid \"1 1\"").out == "1\n");
  CHECK(run("invariant --which kauffman+ --strands 3 --braid \"1 2\"").out == "1\n");
  CHECK(run("invariant --which t0x2a --strands 3 --braid \"1 -2 1 -2\"").out == "16\n");
  CHECK(run("invariant --which hecke --strands 2 --braid \"1 1 1\" --at x2a").out == "1\n");
  CHECK(run("invariant --which kauffman- --strands 3 --braid \"1 -2 1 -2\" --at x2a").out == "25\n");
  CHECK(run("invariant --which t0x2a --variant printed --strands 2 --braid \"1 1 1\"").out == "6 - 6*a\n");
}

TEST_CASE("kauffman subcommand") {
  CHECK(run("kauffman --variant + --strands 2 --braid \"\"").out == "x^-1 - 1 + a*x^-1\n");
  CHECK(run("kauffman --variant - --strands 3 --braid \"1 -2 1 -2\" --at a=-1,x=-2").out == "25\n");
  CHECK(run("kauffman --variant + --strands 2 --braid \"1 1 1\" --at a=1/2,x=3").code == 0);
}

TEST_CASE("errors") {
  auto r = run("invariant --which nope --strands 2 --braid \"1\"");
  CHECK(r.code == 2);
  CHECK(r.out.find("unknown invariant") != std::string::npos);
  CHECK(run("invariant --which t0x2a --strands 2 --braid \"1 5\"").code == 2);
  CHECK(run("kauffman --variant + --strands 2 --braid \"1\" --at a=1").code == 2);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("table --column xa").code == 2);
  CHECK(run("").code != 0);
}

TEST_CASE("table subcommand") {
  auto r = run("table");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  4_1  computed 16, expected 16") != std::string::npos);
  CHECK(r.out.find("PASS  5_2  computed 48, expected 48") != std::string::npos);
  CHECK(r.out.find("PASS  3_1#3_1  computed 64, expected 64") != std::string::npos);
  CHECK(r.out.find("thm ") != std::string::npos);

  std::string path = "cli_test_table.tsv";
  {
    std::ofstream f(path);
    f << "name\tstrands\tword\texpected_x2a\tkind\tprovenance\n";
    f << "3_1\t2\t1 1 1\t0\tknot\ttest\n";
    f << "4_1\t3\t1 -2 1 -2\t17\tknot\ttest\n";
  }
  auto bad = run("table --input " + path);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL  4_1  computed 16, expected 17") != std::string::npos);
  {
    std::ofstream f(path);
    f << "name\tstrands\tword\texpected_x2a\tkind\tprovenance\n";
    f << "2_1^2\t2\t1 1\t0\tknot\ttest\n";
  }
  CHECK(run("table --input " + path).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify is deterministic") {
  auto a = run("verify --suite hecke --seed 7");
  auto b = run("verify --suite hecke --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run_verify("braid", {}).render() == run_verify("braid", {}).render());
  CHECK(run("verify --suite coxeter --seed 7").code == 0);
  // the documented discrepancies make the h3 and tl suites exit 1
  CHECK(run("verify --suite h3").code == 1);
}
