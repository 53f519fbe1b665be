#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "futaki/verify.hpp"

using namespace futaki;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_quiet(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const CaseOutcome* find(const std::vector<CaseOutcome>& outcomes, const std::string& id) {
  for (const auto& o : outcomes)
    if (o.id == id) return &o;
  return nullptr;
}

const std::vector<std::string> kExceptions = {"3.9", "3.13", "3.19", "3.20", "4.2", "4.4", "4.7", "5.3"};

bool is_subcone_record(const CaseRecord& r) { return r.expected->kind == ExpectedVerdict::Kind::subcone; }

Check criterion1(const Catalog& cat, const std::vector<CaseOutcome>& outcomes, double elapsed) {
  Check c;
  for (const auto& o : outcomes) {
    const auto& r = *cat.find(o.id);
    if (is_subcone_record(r) || r.expected->kind == ExpectedVerdict::Kind::see_toric) continue;
    c.require(std::holds_alternative<FullCone>(o.verdict), o.id + " is " + tag(o.verdict));
  }
  const auto exc = exception_list(outcomes);
  c.require(exc == kExceptions, "exception list differs");
  c.require(run_quiet("'" FUTAKI_CLI "' verify --all") == 0, "verify --all exited nonzero");
  c.require(elapsed < 30, "verify --all took " + std::to_string(elapsed) + " s");
  if (c.ok) c.detail = std::to_string(outcomes.size()) + " records in " + std::to_string(elapsed) + " s";
  return c;
}

Check criterion2(const Catalog& cat, const std::vector<CaseOutcome>& outcomes) {
  Check c;
  std::vector<std::string> seen;
  for (const auto& o : outcomes) {
    const auto& r = *cat.find(o.id);
    if (!is_subcone_record(r)) continue;
    seen.push_back(r.family());
    c.require(contains(o.verdict, *r.anticanonical), o.id + " misses the anticanonical class");
    std::size_t need = 2;
    if (r.family() == "4.2" || r.family() == "4.4") need = 3;
    c.require(vanishing_dim(o.verdict) >= need, o.id + " has dimension " + std::to_string(vanishing_dim(o.verdict)));
    if (r.family() == "3.13") {
      const auto* s = std::get_if<Subcone>(&o.verdict);
      std::size_t planes = 0;
      if (s)
        for (const auto& comp : s->components) planes += comp.dim() >= 2;
      c.require(planes >= 2, "3.13 has fewer than two 2-dimensional families");
    }
  }
  std::sort(seen.begin(), seen.end());
  auto expected = kExceptions;
  std::sort(expected.begin(), expected.end());
  c.require(seen == expected, "subcone records do not cover the exception list");
  return c;
}

Check criterion3(const Catalog& cat) {
  Check c;
  const auto t0 = Clock::now();
  const auto& fam = toric_family("s6");
  const auto scan = zero_locus_scan(fam, Rational(1, 4), locus_candidates(fam, loci_for(cat, "s6")), 0);
  const double elapsed = seconds_since(t0);
  const Rational h = 3;
  std::size_t zeros = 0;
  for (const auto& p : scan.points) {
    const Rational &a = p.free_values[0], &b = p.free_values[1], &cc = p.free_values[2];
    const bool on_line = cc == h - a - b && a + b < h;
    const bool on_diagonal = a == b && b == cc && cc < Rational(3, 2);
    const bool zero = is_zero_vector(futaki_vector(class_to_polytope(fam, {h, a, b, cc})));
    c.require(zero == p.zero, "scan disagrees with a direct evaluation");
    c.require(zero == (on_line || on_diagonal),
              "grid point (" + to_string(a) + ", " + to_string(b) + ", " + to_string(cc) + ")");
    zeros += zero;
  }
  c.require(scan.zero_set_equals_union, "scan does not report the union of the two loci");
  c.require(elapsed < 10, "scan took " + std::to_string(elapsed) + " s");
  if (c.ok)
    c.detail = std::to_string(scan.points.size()) + " grid points, " + std::to_string(zeros) + " zeros, " +
               std::to_string(elapsed) + " s";
  return c;
}

Check criterion4(const std::vector<CaseOutcome>& outcomes) {
  Check c;
  const auto* o224 = find(outcomes, "2.24");
  c.require(o224 && !o224->adjoints.empty(), "2.24 has no adjoint matrices");
  if (o224 && !o224->adjoints.empty()) {
    const auto& a = o224->adjoints[0];
    c.require(a.name == "sigma", "first 2.24 symmetry is not sigma");
    // Columns: Ad(v1) = -(v1 + v2), Ad(v2) = v2.
    QMatrix expect(2, 2);
    expect(0, 0) = -1;
    expect(1, 0) = -1;
    expect(1, 1) = 1;
    c.require(a.matrix == expect, "A_sigma for 2.24 is " + to_string(a.matrix));
  }
  QMatrix minus_one(1, 1);
  minus_one(0, 0) = -1;
  for (const char* id : {"2.20", "2.29", "3.12", "3.15", "3.20", "4.3", "4.13"}) {
    const auto* o = find(outcomes, id);
    bool found = false;
    if (o)
      for (const auto& a : o->adjoints) found = found || (a.name == "tau" && a.matrix == minus_one);
    c.require(found, std::string(id) + " has no tau with A = (-1)");
  }
  return c;
}

Check criterion5(const Catalog& cat) {
  Check c;
  for (const char* id : {"s6", "p1xp2", "p1xp1xp1", "p1xs6"}) {
    const auto& fam = toric_family(id);
    c.require(is_zero_vector(futaki_vector(class_to_polytope(fam, fam.anticanonical))),
              std::string(id) + " is nonzero at its anticanonical class");
  }
  const auto* r = cat.find("3.25");
  c.require(r && r->toric_params, "3.25 has no toric parameters");
  if (r && r->toric_params)
    c.require(is_zero_vector(futaki_vector(class_to_polytope(toric_family(r->toric), *r->toric_params))),
              "3.25 is nonzero at " + to_string(*r->toric_params));
  return c;
}

Check criterion6(const std::vector<CaseOutcome>& outcomes) {
  Check c;
  const auto* o = find(outcomes, "3.25");
  c.require(o != nullptr, "no 3.25 record");
  if (!o) return c;
  bool diag = false, claim = false;
  for (const auto& n : o->notes) {
    diag = diag || n.find("adjoint action unsolvable: w1") != std::string::npos;
    if (n.rfind("claim ", 0) == 0) {
      claim = true;
      c.detail = n;
    }
  }
  c.require(diag, "adjoint diagnostic missing");
  c.require(o->toric && o->toric->scan.has_value(), "toric scan missing");
  if (o->toric) c.require(!o->toric->outcome.empty(), "toric scan outcome missing");
  c.require(claim, "agreement flag missing");
  c.require(o->match, "3.25 row does not reproduce its recorded outcomes");
  return c;
}

Check criterion7() {
  Check c;
  c.require(run_quiet("'" FUTAKI_TESTS "' --test-suite=property") == 0, "property suite failed");
  return c;
}

Check criterion8(const Catalog& cat) {
  Check c;
  const auto findings = validate_catalog(cat);
  c.require(findings.empty(), std::to_string(findings.size()) + " findings");
  c.require(print_catalog(cat) == read_file(FUTAKI_DEFAULT_CATALOG), "catalog does not round-trip");
  c.require(run_quiet("'" FUTAKI_CLI "' catalog validate") == 0, "catalog validate exited nonzero");
  return c;
}

}  // namespace

int main() {
  const Catalog cat = load_catalog(FUTAKI_DEFAULT_CATALOG);
  std::vector<const CaseRecord*> records;
  for (const auto& r : cat.records) records.push_back(&r);
  const auto t0 = Clock::now();
  const auto outcomes = verify_cases(cat, records);
  const double elapsed = seconds_since(t0);

  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"vanishing on the whole cone outside the exception list", [&] { return criterion1(cat, outcomes, elapsed); }},
      {"vanishing families for the exception list", [&] { return criterion2(cat, outcomes); }},
      {"S6 zero locus on the 1/4 grid", [&] { return criterion3(cat); }},
      {"adjoint spot checks", [&] { return criterion4(outcomes); }},
      {"toric zeros at anticanonical classes", [&] { return criterion5(cat); }},
      {"3.25 audit", [&] { return criterion6(outcomes); }},
      {"property suites", [] { return criterion7(); }},
      {"catalog health", [&] { return criterion8(cat); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    failed += !c.ok;
    std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  return failed ? 1 : 0;
}
