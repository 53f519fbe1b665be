#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>

#include "doctest.h"
#include "support.hpp"

using namespace futaki;
using namespace futaki::test;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" FUTAKI_CLI "' " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_catalog(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("futaki-cli-" + name + ".cat");
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::string shipped_with(const std::string& from, const std::string& to) {
  std::string text = read_file(FUTAKI_DEFAULT_CATALOG);
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), to);
  return text;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify single cases") {
    const auto r = cli("verify 2.24");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("2.24: FullCone dim=2 cert={sigma,tau} | expected full_cone | ok\n", 0) == 0);
    const auto s = cli("verify 3.19");
    CHECK(s.code == 0);
    CHECK(s.out.rfind("3.19: Subcone dim=2", 0) == 0);
    const auto fam = cli("verify 3.10");
    CHECK(fam.code == 0);
    CHECK(fam.out.find("3.10-a0:") != std::string::npos);
    CHECK(fam.out.find("3.10-a:") != std::string::npos);
  }

  TEST_CASE("usage errors") {
    CHECK(cli("verify no-such-family").code == 64);
    CHECK(cli("verify").code == 64);
    CHECK(cli("verify 2.24 --all").code == 64);
    CHECK(cli("").code == 64);
    CHECK(cli("frobnicate").code == 64);
    CHECK(cli("toric futaki --family dp7").code == 64);
    CHECK(cli("toric futaki --family s6 --params q=1").code == 64);
    CHECK(cli("toric futaki --family s6 --params a=x").code == 64);
    CHECK(cli("toric scan --family s6 --step 0").code == 64);
    CHECK(cli("toric scan --family s6 --step -1/4").code == 64);
    CHECK(cli("toric scan --family s6 --step abc").code == 64);
    CHECK(cli("report --format xml").code == 64);
    CHECK(cli("--jobs many verify --all").code == 64);
    CHECK(cli("--help").code == 0);
  }

  TEST_CASE("verify all") {
    const auto r = cli("verify --all");
    CHECK(r.code == 0);
    CHECK(r.out.find("exceptions: {3.9, 3.13, 3.19, 3.20, 4.2, 4.4, 4.7, 5.3}\n") != std::string::npos);
  }

  TEST_CASE("toric commands") {
    const auto s6 = cli("toric futaki --family s6 --params a=1,b=1,c=1");
    CHECK(s6.code == 0);
    CHECK(s6.out == "(0, 0)\n");
    CHECK(cli("toric futaki --family p1xp1 --params a=2,b=5").out == "(0, 0)\n");
    CHECK(cli("toric futaki --family s6").out == "(0, 0)\n");
    const auto skew = cli("toric futaki --family s6 --params c=1/2");
    CHECK(skew.code == 0);
    CHECK(skew.out != "(0, 0)\n");
    CHECK(cli("toric futaki --family s6 --params a=2").code == 3);
    CHECK(cli("toric futaki --family bl2lines --params a=3,b=1").code == 3);
    const auto scan = cli("toric scan --family s6 --step 1/4");
    CHECK(scan.code == 0);
    CHECK(scan.out.find("zero_set_equals_union = true") != std::string::npos);
    CHECK(scan.out.find("1 1 1 -> zero\n") != std::string::npos);
  }

  TEST_CASE("catalog commands") {
    const auto v = cli("catalog validate");
    CHECK(v.code == 0);
    CHECK(v.out == "35 records, 0 findings, round trip exact\n");
    const auto bad = temp_catalog("finding", shipped_with("torus v = (1, -1, 1, -1, 0)", "torus v = (1, -1, 0, 0, 0)"));
    const auto f = cli("--catalog " + bad + " catalog validate");
    CHECK(f.code == 2);
    CHECK(f.out.find("3.10-a: torus v on equation 1") != std::string::npos);
    CHECK(cli("--catalog " + bad + " verify 2.24").code == 2);
    const auto broken = temp_catalog("broken", "format = 1\n[case \"x\"]\nflavour = 1\n");
    CHECK(cli("--catalog " + broken + " verify --all").code == 2);
    CHECK(cli("--catalog /nonexistent.cat verify --all").code == 2);
    CHECK(cli("verify 2.24", "FUTAKI_CATALOG=/nonexistent.cat").code == 2);
    CHECK(cli("verify 2.24", "FUTAKI_CATALOG=" FUTAKI_DEFAULT_CATALOG).code == 0);
  }

  TEST_CASE("a verdict mismatch exits 1 with a diff") {
    const auto path = temp_catalog("mismatch", shipped_with("expected = subcone(2)\n\n[case \"3.20\"]",
                                                            "expected = full_cone\n\n[case \"3.20\"]"));
    const auto r = cli("--catalog " + path + " verify 3.19");
    CHECK(r.code == 1);
    CHECK(r.out.find("MISMATCH") != std::string::npos);
  }

  TEST_CASE("reports") {
    const auto a = cli("report");
    const auto b = cli("--jobs 1 report");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("consistent: 35/35") != std::string::npos);
    const auto j = cli("report --format json-lines");
    CHECK(j.code == 0);
    CHECK(std::count(j.out.begin(), j.out.end(), '\n') == 36);
    const auto one = cli("report --family 3.25");
    CHECK(one.code == 0);
    CHECK(one.out.find("3.25 ") != std::string::npos);
    CHECK(one.out.find("consistent: 1/1") != std::string::npos);
  }
}
