#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "futaki/verify.hpp"

#ifndef FUTAKI_DEFAULT_CATALOG
#define FUTAKI_DEFAULT_CATALOG "data/fano3.cat"
#endif

namespace {

using namespace futaki;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kCatalogError = 2;
constexpr int kOutOfRegion = 3;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FindingsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string catalog;
  unsigned jobs = 0;
  std::string id;
  bool all = false;
  std::string family;
  std::string params;
  std::string step = "1/4";
  std::string format = "text";
};

Catalog open_catalog(const RunConfig& cfg, bool validate) {
  Catalog cat = load_catalog(cfg.catalog);
  if (validate) {
    const auto findings = validate_catalog(cat);
    if (!findings.empty()) {
      std::string msg = std::to_string(findings.size()) + " validation finding(s)";
      for (const auto& f : findings) msg += "\n  " + f.id + ": " + f.message;
      throw FindingsError(msg);
    }
  }
  return cat;
}

std::vector<const CaseRecord*> select(const Catalog& cat, const std::string& id) {
  std::vector<const CaseRecord*> out;
  if (id.empty()) {
    for (const auto& r : cat.records) out.push_back(&r);
    return out;
  }
  if (const auto* r = cat.find(id)) return {r};
  for (const auto& r : cat.records)
    if (r.family() == id) out.push_back(&r);
  if (out.empty()) throw UsageError("unknown family id '" + id + "'");
  return out;
}

Rational parse_step(const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const Error&) {
    throw UsageError("grid step must be a rational number, got '" + text + "'");
  }
  if (q <= 0) throw UsageError("grid step must be positive");
  return q;
}

const ToricFamily& family_or_usage(const std::string& id) {
  try {
    return toric_family(id);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

QVector parse_params(const ToricFamily& fam, const std::string& text) {
  QVector values = fam.anticanonical;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + item + "' is not of the form name=value");
    const std::string name = item.substr(0, eq);
    const auto it = std::find(fam.params.begin(), fam.params.end(), name);
    if (it == fam.params.end()) throw UsageError("family " + fam.id + " has no parameter '" + name + "'");
    try {
      values[static_cast<std::size_t>(it - fam.params.begin())] = parse_rational(item.substr(eq + 1));
    } catch (const Error&) {
      throw UsageError("parameter '" + name + "' needs a rational value");
    }
  }
  return values;
}

unsigned scan_jobs(const RunConfig& cfg) {
  if (cfg.jobs) return cfg.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.id.empty() && !cfg.all) throw UsageError("verify needs a family id or --all");
  if (!cfg.id.empty() && cfg.all) throw UsageError("verify takes a family id or --all, not both");
  const Catalog cat = open_catalog(cfg, true);
  const auto records = select(cat, cfg.id);
  VerifyOptions opts;
  opts.jobs = cfg.jobs;
  const auto outcomes = verify_cases(cat, records, opts);
  bool ok = true;
  for (const auto& o : outcomes) {
    std::cout << format_outcome(o);
    ok = ok && o.match;
  }
  if (cfg.all) {
    std::cout << "exceptions: {";
    const auto exc = exception_list(outcomes);
    for (std::size_t i = 0; i < exc.size(); ++i) std::cout << (i ? ", " : "") << exc[i];
    std::cout << "}\n";
  }
  return ok ? kOk : kMismatch;
}

int cmd_report(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json-lines") throw UsageError("unknown format '" + cfg.format + "'");
  const Catalog cat = open_catalog(cfg, true);
  const auto records = select(cat, cfg.family);
  VerifyOptions opts;
  opts.jobs = cfg.jobs;
  const auto outcomes = verify_cases(cat, records, opts);
  std::cout << (cfg.format == "text" ? format_report_text(outcomes) : format_report_json_lines(outcomes));
  for (const auto& o : outcomes)
    if (!o.match) return kMismatch;
  return kOk;
}

int cmd_toric_futaki(const RunConfig& cfg) {
  const auto& fam = family_or_usage(cfg.family);
  const QVector params = parse_params(fam, cfg.params);
  std::cout << to_string(futaki_vector(class_to_polytope(fam, params))) << "\n";
  return kOk;
}

int cmd_toric_scan(const RunConfig& cfg) {
  const auto& fam = family_or_usage(cfg.family);
  const Rational step = parse_step(cfg.step);
  const Catalog cat = open_catalog(cfg, false);
  const auto scan = zero_locus_scan(fam, step, locus_candidates(fam, loci_for(cat, fam.id)), scan_jobs(cfg));
  std::cout << format_scan(scan);
  return kOk;
}

int cmd_catalog_validate(const RunConfig& cfg) {
  const Catalog cat = open_catalog(cfg, false);
  const auto findings = validate_catalog(cat);
  for (const auto& f : findings) std::cout << f.id << ": " << f.message << "\n";
  const bool round_trip = print_catalog(cat) == [&] {
    std::ifstream in(cfg.catalog, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }();
  std::cout << cat.records.size() << " records, " << findings.size() << " findings, round trip "
            << (round_trip ? "exact" : "differs") << "\n";
  return findings.empty() ? kOk : kCatalogError;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.catalog = FUTAKI_DEFAULT_CATALOG;

  CLI::App app{"Futaki invariant checks for Fano threefolds"};
  app.require_subcommand(1);
  app.add_option("--catalog", cfg.catalog, "Catalog file")->envname("FUTAKI_CATALOG");
  app.add_option("--jobs", cfg.jobs, "Worker threads (default: one per case)");

  auto* verify = app.add_subcommand("verify", "Verify catalog cases against their expected verdicts");
  verify->add_option("id", cfg.id, "Case or family id");
  verify->add_flag("--all", cfg.all, "Verify every case");

  auto* toric = app.add_subcommand("toric", "Toric Futaki computations");
  toric->require_subcommand(1);
  auto* futaki = toric->add_subcommand("futaki", "Futaki vector of one class");
  futaki->add_option("--family", cfg.family, "Toric family id")->required();
  futaki->add_option("--params", cfg.params, "Parameter values, e.g. a=1,b=1/2");
  auto* scan = toric->add_subcommand("scan", "Zero-locus scan over a rational grid");
  scan->add_option("--family", cfg.family, "Toric family id")->required();
  scan->add_option("--step", cfg.step, "Grid step (rational)");

  auto* catalog = app.add_subcommand("catalog", "Catalog maintenance");
  catalog->require_subcommand(1);
  auto* validate = catalog->add_subcommand("validate", "Consistency checks and round trip");

  auto* report = app.add_subcommand("report", "Summary table over the catalog");
  report->add_option("--format", cfg.format, "text or json-lines");
  report->add_option("--family", cfg.family, "Restrict to one case or family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(cfg);
    if (*report) return cmd_report(cfg);
    if (*futaki) return cmd_toric_futaki(cfg);
    if (*scan) return cmd_toric_scan(cfg);
    if (*validate) return cmd_catalog_validate(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kCatalogError;
  } catch (const FindingsError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kCatalogError;
  } catch (const OutOfRegion& e) {
    std::cerr << "out of region: " << e.what() << "\n";
    return kOutOfRegion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
