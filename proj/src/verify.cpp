#include "futaki/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace futaki {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

SymmetryData polynomial_symmetry(const CaseRecord& r, const FiniteEntry& f) {
  SymmetryData s;
  s.name = f.name;
  const auto& tau = *f.map;
  std::vector<std::size_t> perm(r.centers.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<std::string> problems;

  if (!r.equations.empty()) {
    auto inv = check_variety_invariant(r.equations, tau);
    if (!inv.invariant) problems.push_back("equations not preserved: " + inv.diagnostic);
  }
  if (!r.centers.empty()) {
    try {
      perm = match_centers(r.centers, tau).perm;
    } catch (const UnmatchedCenter& e) {
      problems.push_back(e.what());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    }
  }
  s.h11 = h11_action(tau.factor_sources(), perm);

  auto adj = adjoint_matrix(tau, r.torus_generators());
  if (!adj.matrix) problems.push_back("adjoint action unsolvable: " + adj.diagnostic);
  if (problems.empty()) {
    s.adjoint = std::move(adj.matrix);
  } else {
    s.diagnostic = join(problems, "; ");
  }
  return s;
}

bool adjoint_failed(const SymmetryData& s) { return s.diagnostic.find("adjoint action unsolvable") != std::string::npos; }

struct ScanCache {
  const Catalog& catalog;
  const VerifyOptions& options;
  unsigned jobs;
  std::map<std::string, ScanResult> done;

  const ScanResult& get(const ToricFamily& fam, const std::vector<LocusEntry>& loci) {
    auto it = done.find(fam.id);
    if (it != done.end()) return it->second;
    return done.emplace(fam.id, zero_locus_scan(fam, options.step, locus_candidates(fam, loci), jobs)).first->second;
  }
};

Verdict factor_verdict(const ToricFamily& fam, const ScanResult& scan, const std::vector<LocusEntry>& loci) {
  const std::string cert = "toric:" + fam.id;
  if (scan.identically_zero) return FullCone{{cert}, fam.params.size()};
  if (scan.zero_set_equals_union) {
    std::vector<std::vector<QVector>> forms;
    for (const auto& l : loci) forms.push_back(parse_linear_forms(fam, l.forms));
    return verdict_from_loci(forms, fam.params.size(), cert);
  }
  return Inconclusive{{"zero set of " + fam.id + " is neither everything nor the union of the candidate loci"}};
}

bool subcone_matches(const Verdict& v, const ExpectedVerdict& e, const std::optional<QVector>& c) {
  const auto* sub = std::get_if<Subcone>(&v);
  if (!sub || !c) return false;
  std::size_t count = 0;
  for (const auto& comp : sub->components)
    if (comp.dim() >= e.dim && in_span(comp.basis, *c)) ++count;
  return count >= e.components;
}

std::string verdict_summary(const Verdict& v) { return tag(v) + " dim=" + std::to_string(vanishing_dim(v)); }

std::pair<int, int> numeric_id(const std::string& id) {
  const auto dot = id.find('.');
  try {
    if (dot == std::string::npos) return {std::stoi(id), 0};
    return {std::stoi(id.substr(0, dot)), std::stoi(id.substr(dot + 1))};
  } catch (const std::exception&) {
    return {0, 0};
  }
}

}  // namespace

ConstraintSystem build_constraints(const CaseRecord& r) {
  ConstraintSystem sys;
  sys.semisimple = r.semisimple;
  switch (r.kind) {
    case CaseKind::semisimple_full:
      sys.semisimple_full = true;
      sys.h11_dim = r.picard.value_or(0);
      return sys;
    case CaseKind::abstract:
      sys.torus_rank = r.torus_rank.value_or(0);
      sys.h11_dim = r.h11.size();
      for (const auto& f : r.finite) {
        SymmetryData s;
        s.name = f.name;
        s.h11 = f.h11.value_or(QMatrix::identity(sys.h11_dim));
        if (f.adjoint) {
          s.adjoint = f.adjoint;
        } else {
          s.diagnostic = "no adjoint matrix recorded";
        }
        sys.symmetries.push_back(std::move(s));
      }
      return sys;
    case CaseKind::polynomial:
      sys.torus_rank = r.torus.size();
      sys.h11_dim = r.h11.size();
      for (const auto& f : r.finite) {
        if (!f.map) throw DomainError(r.id + ": symmetry " + f.name + " has no map");
        sys.symmetries.push_back(polynomial_symmetry(r, f));
      }
      return sys;
    case CaseKind::product:
    case CaseKind::toric_crosscheck:
      break;
  }
  throw DomainError(r.id + ": " + std::string(to_string(r.kind)) + " cases have no constraint system");
}

std::string scan_outcome(const ScanResult& scan) {
  if (scan.identically_zero) return "identically_zero";
  if (scan.zero_set_equals_union) return "equals_loci";
  return "not_identically_zero";
}

std::vector<LocusCandidate> locus_candidates(const ToricFamily& family, const std::vector<LocusEntry>& loci) {
  std::vector<LocusCandidate> out;
  for (const auto& l : loci) out.push_back({"(" + join(l.forms, ", ") + ")", parse_linear_forms(family, l.forms)});
  return out;
}

CaseOutcome verify_case(const CaseRecord& r, const Catalog& catalog, const VerifyOptions& options) {
  CaseOutcome out;
  out.id = r.id;
  out.kind = r.kind;
  out.aut = r.aut;
  out.expected = r.expected.value_or(ExpectedVerdict{});
  ScanCache scans{catalog, options, options.jobs == 0 ? 1u : options.jobs, {}};

  if (r.kind == CaseKind::product || r.kind == CaseKind::toric_crosscheck) {
    std::vector<std::string> fams = r.factors;
    if (r.kind == CaseKind::toric_crosscheck) fams = {r.toric};
    std::vector<Verdict> verdicts;
    std::vector<std::size_t> dims;
    for (const auto& id : fams) {
      const auto& fam = toric_family(id);
      auto loci = loci_for(catalog, id);
      verdicts.push_back(factor_verdict(fam, scans.get(fam, loci), loci));
      dims.push_back(fam.params.size());
    }
    out.verdict = product_verdict(verdicts, dims);
  } else {
    const auto sys = build_constraints(r);
    auto report = vanishing_verdict(sys);
    out.verdict = std::move(report.verdict);
    out.subsets = std::move(report.subsets);
    for (const auto& s : sys.symmetries)
      if (s.adjoint) out.adjoints.push_back({s.name, *s.adjoint});
    for (const auto& s : sys.symmetries)
      if (!s.usable()) out.notes.push_back(s.name + ": " + s.diagnostic);
  }

  const bool see_toric = out.expected.kind == ExpectedVerdict::Kind::see_toric;
  if (!r.toric.empty()) {
    const auto& fam = toric_family(r.toric);
    ToricAudit audit;
    audit.family = fam.id;
    if (r.toric_params) {
      audit.params = *r.toric_params;
    } else if (r.anticanonical && r.kind != CaseKind::polynomial) {
      audit.params = *r.anticanonical;
    } else {
      audit.params = fam.anticanonical;
    }
    audit.futaki = futaki_vector(class_to_polytope(fam, audit.params));
    const bool zero = is_zero_vector(audit.futaki);
    const std::string where = fam.id + " at " + to_string(audit.params);
    if (zero) {
      out.notes.push_back("anticanonical toric check " + where + ": futaki vector zero");
    } else {
      out.diff.push_back("anticanonical toric check " + where + ": futaki vector " + to_string(audit.futaki));
    }
    if (see_toric) {
      std::vector<LocusEntry> loci;
      for (const auto& l : r.loci)
        if (l.family == fam.id) loci.push_back(l);
      audit.scan = scans.get(fam, loci);
      audit.outcome = scan_outcome(*audit.scan);
      std::string detail = "toric scan " + fam.id + " (step " + to_string(options.step) + "): " + audit.outcome +
                           ", " + std::to_string(audit.scan->zeros) + " zero of " +
                           std::to_string(audit.scan->points.size()) + " points";
      for (const auto& l : audit.scan->loci)
        detail += "; locus " + l.text + " zero at " + std::to_string(l.zero_on_locus) + " of " +
                  std::to_string(l.on_locus);
      detail += "; " + std::to_string(audit.scan->zeros_off_loci) + " zeros off the loci";
      out.notes.push_back(detail);
    }
    out.toric = std::move(audit);
  }

  switch (out.expected.kind) {
    case ExpectedVerdict::Kind::full_cone:
      if (!std::holds_alternative<FullCone>(out.verdict)) out.diff.push_back("expected FullCone");
      break;
    case ExpectedVerdict::Kind::subcone:
      if (!subcone_matches(out.verdict, out.expected, r.anticanonical))
        out.diff.push_back("expected " + std::to_string(out.expected.components) +
                           " vanishing famil" + (out.expected.components == 1 ? "y" : "ies") + " of dimension >= " +
                           std::to_string(out.expected.dim) + " containing the anticanonical class");
      break;
    case ExpectedVerdict::Kind::see_toric: {
      bool any_failed = false;
      if (r.kind == CaseKind::polynomial) {
        const auto sys = build_constraints(r);
        any_failed = std::any_of(sys.symmetries.begin(), sys.symmetries.end(), adjoint_failed);
      }
      const std::string adjoint = any_failed ? "unsolvable" : "solvable";
      if (adjoint != r.expect_adjoint) out.diff.push_back("adjoint solve is " + adjoint + ", recorded " + r.expect_adjoint);
      const std::string toric = out.toric ? out.toric->outcome : "";
      if (toric != r.expect_toric) out.diff.push_back("toric scan is " + toric + ", recorded " + r.expect_toric);
      break;
    }
  }

  if (r.claim) {
    bool agrees = false;
    std::string computed = verdict_summary(out.verdict);
    if (see_toric && out.toric) {
      computed += ", toric " + out.toric->outcome;
      agrees = r.claim->kind == ExpectedVerdict::Kind::full_cone && out.toric->outcome == "identically_zero";
    } else if (r.claim->kind == ExpectedVerdict::Kind::full_cone) {
      agrees = std::holds_alternative<FullCone>(out.verdict);
    } else if (r.claim->kind == ExpectedVerdict::Kind::subcone) {
      agrees = subcone_matches(out.verdict, *r.claim, r.anticanonical);
    }
    out.notes.push_back("claim " + to_string(*r.claim) + (agrees ? " agrees" : " disagrees") + " with the computation (" +
                        computed + ")");
  }

  out.match = out.diff.empty();
  return out;
}

std::vector<CaseOutcome> verify_cases(const Catalog& catalog, const std::vector<const CaseRecord*>& records,
                                      const VerifyOptions& options) {
  std::vector<CaseOutcome> out(records.size());
  std::vector<std::exception_ptr> errors(records.size());
  const unsigned requested = options.jobs == 0 ? static_cast<unsigned>(records.size()) : options.jobs;
  const unsigned workers = std::max(1u, std::min<unsigned>(requested, static_cast<unsigned>(records.size())));
  VerifyOptions inner = options;
  inner.jobs = workers > 1 ? 1 : options.jobs;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      try {
        out[i] = verify_case(*records[i], catalog, inner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::string> exception_list(const std::vector<CaseOutcome>& outcomes) {
  std::vector<std::string> out;
  for (const auto& o : outcomes) {
    if (o.expected.kind == ExpectedVerdict::Kind::see_toric) continue;
    if (std::holds_alternative<FullCone>(o.verdict)) continue;
    const std::string fam = o.id.substr(0, o.id.find('-'));
    if (std::find(out.begin(), out.end(), fam) == out.end()) out.push_back(fam);
  }
  std::sort(out.begin(), out.end(),
            [](const std::string& a, const std::string& b) { return numeric_id(a) < numeric_id(b); });
  return out;
}

std::string format_outcome(const CaseOutcome& o) {
  std::string out = o.id + ": " + to_string(o.verdict) + " | expected " + to_string(o.expected) + " | " +
                    (o.match ? "ok" : "MISMATCH") + "\n";
  for (const auto& a : o.adjoints) out += "  adjoint " + a.name + " = " + to_string(a.matrix) + "\n";
  for (const auto& n : o.notes) out += "  note: " + n + "\n";
  for (const auto& d : o.diff) out += "  - " + d + "\n";
  return out;
}

std::string format_report_text(const std::vector<CaseOutcome>& outcomes) {
  std::ostringstream os;
  os << std::left << std::setw(11) << "id" << std::setw(22) << "aut" << std::setw(20) << "computed" << std::setw(17)
     << "expected"
     << "match\n";
  for (const auto& o : outcomes) {
    os << std::setw(11) << o.id << std::setw(22) << o.aut << std::setw(20) << verdict_summary(o.verdict)
       << std::setw(17) << to_string(o.expected) << (o.match ? "yes" : "NO") << "\n";
    if (o.expected.kind == ExpectedVerdict::Kind::see_toric || !o.match)
      for (const auto& n : o.notes) os << "  " << n << "\n";
    else
      for (const auto& n : o.notes)
        if (n.rfind("claim ", 0) == 0) os << "  " << n << "\n";
    for (const auto& d : o.diff) os << "  - " << d << "\n";
  }
  const auto exc = exception_list(outcomes);
  os << "exceptions: {" << join(exc, ", ") << "}\n";
  const auto matched = std::count_if(outcomes.begin(), outcomes.end(), [](const CaseOutcome& o) { return o.match; });
  os << "consistent: " << matched << "/" << outcomes.size() << "\n";
  return os.str();
}

std::string format_report_json_lines(const std::vector<CaseOutcome>& outcomes) {
  using nlohmann::ordered_json;
  std::string out;
  for (const auto& o : outcomes) {
    ordered_json row;
    row["id"] = o.id;
    row["kind"] = std::string(to_string(o.kind));
    row["aut"] = o.aut;
    row["computed"] = tag(o.verdict);
    row["dim"] = vanishing_dim(o.verdict);
    row["verdict"] = to_string(o.verdict);
    row["expected"] = to_string(o.expected);
    row["match"] = o.match;
    row["notes"] = o.notes;
    row["diff"] = o.diff;
    out += row.dump() + "\n";
  }
  ordered_json summary;
  summary["exceptions"] = exception_list(outcomes);
  summary["cases"] = outcomes.size();
  summary["consistent"] = std::count_if(outcomes.begin(), outcomes.end(), [](const CaseOutcome& o) { return o.match; });
  out += summary.dump() + "\n";
  return out;
}

}  // namespace futaki
