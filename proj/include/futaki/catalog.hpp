#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "futaki/symmetry.hpp"

namespace futaki {

/// Grammar or reference error in catalog text; line and column are 1-based.
class CatalogError : public Error {
 public:
  CatalogError(const std::string& what, std::size_t line, std::size_t column = 1);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

enum class CaseKind { polynomial, abstract, product, semisimple_full, toric_crosscheck };

std::string_view to_string(CaseKind kind);

struct ExpectedVerdict {
  enum class Kind { full_cone, subcone, see_toric };
  Kind kind = Kind::full_cone;
  /// Minimum dimension of a vanishing family (subcone only).
  std::size_t dim = 0;
  /// Minimum number of distinct families of that dimension (subcone only).
  std::size_t components = 1;
  bool explicit_components = false;

  friend bool operator==(const ExpectedVerdict&, const ExpectedVerdict&) = default;
};

std::string to_string(const ExpectedVerdict& e);

struct TorusEntry {
  std::string name;
  std::vector<Integer> raw;
  TorusGenerator generator;
};

struct FiniteEntry {
  std::string name;
  unsigned order = 1;
  /// Polynomial records.
  std::optional<MonomialAutomorphism> map;
  /// Abstract records: transcribed adjoint and H^{1,1} matrices.
  std::optional<QMatrix> adjoint;
  std::optional<QMatrix> h11;
};

struct LocusEntry {
  std::string family;
  std::vector<std::string> forms;
};

struct Justification {
  std::string target;
  std::string text;
};

struct CaseRecord {
  std::string id;
  std::size_t line = 0;
  CaseKind kind = CaseKind::polynomial;
  std::string aut;
  std::vector<std::string> notes;

  /// Ring of the ambient space (polynomial records).
  RingPtr ring;
  std::vector<MultiPoly> equations;
  std::vector<SubvarietyPresentation> centers;
  std::vector<TorusEntry> torus;
  std::vector<FiniteEntry> finite;
  std::vector<std::string> semisimple;
  std::optional<std::size_t> torus_rank;

  std::vector<std::string> h11;
  std::optional<std::size_t> picard;
  std::optional<QVector> anticanonical;
  std::optional<ExpectedVerdict> expected;
  std::optional<ExpectedVerdict> claim;

  std::vector<std::string> factors;
  std::string toric;
  std::optional<QVector> toric_params;
  std::vector<LocusEntry> loci;
  std::string expect_adjoint;
  std::string expect_toric;
  std::vector<Justification> justify;

  /// Canonical text of each entry line, in source order.
  std::vector<std::string> entries;

  /// Id up to the first '-' ("3.10-a0" -> "3.10").
  std::string family() const;
  /// Torus generators in declaration order.
  std::vector<TorusGenerator> torus_generators() const;
  std::size_t effective_torus_rank() const;
};

struct Catalog {
  int format = 1;
  std::vector<CaseRecord> records;

  /// Source layout: comment and blank lines kept verbatim.
  struct Line {
    enum class Kind { raw, format, header, entry };
    Kind kind = Kind::raw;
    std::size_t record = 0;
    std::size_t entry = 0;
    std::string raw;
  };
  std::vector<Line> layout;

  const CaseRecord* find(std::string_view id) const;
};

Catalog parse_catalog(std::string_view text);
Catalog load_catalog(const std::string& path);

/// Canonical text; reproduces canonical input byte for byte.
std::string print_catalog(const Catalog& catalog);

struct Finding {
  std::string id;
  std::string message;
};

std::vector<Finding> validate_case(const CaseRecord& record);
std::vector<Finding> validate_catalog(const Catalog& catalog);

/// Values of the record parameter that are excluded (empty without parameter).
const std::vector<Rational>& excluded_values(const CaseRecord& record);

/// Candidate loci declared anywhere in the catalog for a toric family.
std::vector<LocusEntry> loci_for(const Catalog& catalog, std::string_view family);

}  // namespace futaki
