#pragma once

#include <optional>
#include <string>
#include <vector>

#include "futaki/catalog.hpp"
#include "futaki/character.hpp"
#include "futaki/toric.hpp"

namespace futaki {

struct VerifyOptions {
  /// Worker threads across cases; 0 means one per case.
  unsigned jobs = 0;
  Rational step{1, 4};
};

struct ToricAudit {
  std::string family;
  QVector params;
  QVector futaki;
  std::optional<ScanResult> scan;
  /// identically_zero, equals_loci or not_identically_zero (empty without a scan).
  std::string outcome;
};

struct NamedMatrix {
  std::string name;
  QMatrix matrix;
};

struct CaseOutcome {
  std::string id;
  CaseKind kind = CaseKind::polynomial;
  std::string aut;
  ExpectedVerdict expected;
  Verdict verdict;
  std::vector<SubsetReport> subsets;
  std::vector<NamedMatrix> adjoints;
  std::optional<ToricAudit> toric;
  bool match = false;
  /// Reasons for a mismatch.
  std::vector<std::string> diff;
  /// Annotations that do not affect the match flag.
  std::vector<std::string> notes;
};

/// Torus rank, semisimple tags and per-symmetry (A_τ, H^{1,1}) data of a
/// polynomial, abstract or semisimple_full record.
ConstraintSystem build_constraints(const CaseRecord& record);

/// Outcome label of a scan against its candidate loci.
std::string scan_outcome(const ScanResult& scan);

std::vector<LocusCandidate> locus_candidates(const ToricFamily& family, const std::vector<LocusEntry>& loci);

CaseOutcome verify_case(const CaseRecord& record, const Catalog& catalog, const VerifyOptions& options = {});

/// Runs the records concurrently; results keep the order of `records`.
std::vector<CaseOutcome> verify_cases(const Catalog& catalog, const std::vector<const CaseRecord*>& records,
                                      const VerifyOptions& options = {});

/// Families (id up to '-') with a computed verdict other than FullCone,
/// ignoring records that defer to a toric computation; sorted numerically.
std::vector<std::string> exception_list(const std::vector<CaseOutcome>& outcomes);

/// "2.24: FullCone dim=2 cert={sigma,tau} | expected full_cone | ok" plus detail lines.
std::string format_outcome(const CaseOutcome& outcome);

std::string format_report_text(const std::vector<CaseOutcome>& outcomes);
/// One JSON object per case followed by a summary object.
std::string format_report_json_lines(const std::vector<CaseOutcome>& outcomes);

}  // namespace futaki
