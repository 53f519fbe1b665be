#include "doctest.h"
#include "futaki/verify.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace futaki;
using namespace futaki::test;

namespace {

CaseOutcome run(const std::string& id) {
  const auto& cat = shipped_catalog();
  const auto* r = cat.find(id);
  REQUIRE(r);
  return verify_case(*r, cat);
}

std::vector<const CaseRecord*> all_records() {
  std::vector<const CaseRecord*> out;
  for (const auto& r : shipped_catalog().records) out.push_back(&r);
  return out;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("2.24") {
    const auto o = run("2.24");
    CHECK(o.match);
    CHECK(format_outcome(o).rfind("2.24: FullCone dim=2 cert={sigma,tau} | expected full_cone | ok\n", 0) == 0);
    REQUIRE(o.adjoints.size() == 2);
    CHECK(o.adjoints[0].matrix == qm({{-1, 0}, {-1, 1}}));
  }

  TEST_CASE("3.19 contains the anticanonical class") {
    const auto o = run("3.19");
    CHECK(o.match);
    REQUIRE(std::holds_alternative<Subcone>(o.verdict));
    CHECK(vanishing_dim(o.verdict) == 2);
    CHECK(contains(o.verdict, *shipped_catalog().find("3.19")->anticanonical));
  }

  TEST_CASE("3.13 has one family per involution") {
    const auto o = run("3.13");
    CHECK(o.match);
    REQUIRE(std::holds_alternative<Subcone>(o.verdict));
    CHECK(std::get<Subcone>(o.verdict).components.size() == 2);
  }

  TEST_CASE("3.25 records both computations") {
    const auto o = run("3.25");
    CHECK(o.match);
    CHECK(std::holds_alternative<Inconclusive>(o.verdict));
    REQUIRE(o.toric);
    CHECK(o.toric->outcome == "not_identically_zero");
    CHECK(is_zero_vector(o.toric->futaki));
    bool diag = false, claim = false;
    for (const auto& n : o.notes) {
      diag = diag || n.find("adjoint action unsolvable") != std::string::npos;
      claim = claim || n.find("claim full_cone disagrees") != std::string::npos;
    }
    CHECK(diag);
    CHECK(claim);
  }

  TEST_CASE("4.7 claim is reported") {
    const auto o = run("4.7");
    CHECK(o.match);
    CHECK(vanishing_dim(o.verdict) == 2);
    REQUIRE(o.notes.size() == 1);
    CHECK(o.notes[0] == "claim subcone(3) disagrees with the computation (Subcone dim=2)");
  }

  TEST_CASE("5.3 product") {
    const auto o = run("5.3");
    CHECK(o.match);
    CHECK(contains(o.verdict, qv({2, 3, 1, 1, 1})));
  }

  TEST_CASE("mismatches are surfaced") {
    auto cat = parse_catalog(read_file(FUTAKI_DEFAULT_CATALOG));
    for (auto& r : cat.records)
      if (r.id == "3.19") r.expected = ExpectedVerdict{};
    const auto o = verify_case(*cat.find("3.19"), cat);
    CHECK_FALSE(o.match);
    CHECK_FALSE(o.diff.empty());
    CHECK(format_outcome(o).find("MISMATCH") != std::string::npos);
  }

  TEST_CASE("full run") {
    const auto outcomes = verify_cases(shipped_catalog(), all_records());
    CHECK(outcomes.size() == 35);
    for (const auto& o : outcomes) {
      CAPTURE(o.id);
      CHECK(o.match);
    }
    CHECK(exception_list(outcomes) ==
          std::vector<std::string>{"3.9", "3.13", "3.19", "3.20", "4.2", "4.4", "4.7", "5.3"});
    const auto text = format_report_text(outcomes);
    CHECK(text.find("exceptions: {3.9, 3.13, 3.19, 3.20, 4.2, 4.4, 4.7, 5.3}") != std::string::npos);
    CHECK(text.find("consistent: 35/35") != std::string::npos);

    VerifyOptions serial;
    serial.jobs = 1;
    CHECK(format_report_text(verify_cases(shipped_catalog(), all_records(), serial)) == text);
  }

  TEST_CASE("json lines") {
    const auto outcomes = verify_cases(shipped_catalog(), {shipped_catalog().find("2.24")});
    const auto lines = format_report_json_lines(outcomes);
    std::istringstream in(lines);
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    const auto row = nlohmann::ordered_json::parse(first);
    std::vector<std::string> keys;
    for (const auto& [k, v] : row.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"id", "kind", "aut", "computed", "dim", "verdict", "expected", "match",
                                           "notes", "diff"});
    CHECK(row["computed"] == "FullCone");
    const auto summary = nlohmann::json::parse(second);
    CHECK(summary["cases"] == 1);
    CHECK(summary["consistent"] == 1);
  }

  TEST_CASE("constraint systems") {
    const auto sys = build_constraints(*shipped_catalog().find("3.9"));
    CHECK(sys.torus_rank == 1);
    CHECK(sys.h11_dim == 3);
    REQUIRE(sys.symmetries.size() == 1);
    CHECK(sys.symmetries[0].adjoint == qm({{-1}}));
  }
}
