#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "futaki/matrix.hpp"

namespace futaki {

/// ⟨normal, x⟩ ≤ offset.
struct Halfspace {
  std::vector<Integer> normal;
  Rational offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Unbounded, empty, lower-dimensional or redundant halfspace data.
class GeometryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Class parameters outside the region where the builder's polytope exists.
class OutOfRegion : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Bounded full-dimensional polytope of dimension 1, 2 or 3 given by
/// primitive outer normals.  Every halfspace supports a facet.
class Polytope {
 public:
  /// Normals are divided by their content (offsets scaled to match).
  static Polytope from_halfspaces(std::vector<Halfspace> halfspaces);

  std::size_t dimension() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  /// Sorted lexicographically.
  const std::vector<QVector>& vertices() const { return vertices_; }
  /// Vertex indices of each facet; in 3D ordered cyclically.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facets_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> halfspaces_;
  std::vector<QVector> vertices_;
  std::vector<std::vector<std::size_t>> facets_;
};

std::vector<QVector> vertices_from_halfspaces(const std::vector<Halfspace>& halfspaces);

struct Integrals {
  Rational volume;
  QVector moment;        // ∫_P x dμ
  Rational sigma_mass;   // ∫_∂P dσ
  QVector sigma_moment;  // ∫_∂P x dσ
  friend bool operator==(const Integrals&, const Integrals&) = default;
};

/// Triangulation from the first vertex; lattice measure by determinants.
Integrals integrals_by_triangulation(const Polytope& p);
/// Divergence theorem over facets; facet measure by coordinate projection.
Integrals integrals_by_divergence(const Polytope& p);

Rational volume(const Polytope& p);
QVector moment(const Polytope& p);

struct BoundaryIntegral {
  Rational mass;
  QVector moment;
};
BoundaryIntegral boundary_integral(const Polytope& p);

/// L(f) for f(x) = ⟨linear, x⟩ + constant.
Rational donaldson_L(const Polytope& p, const QVector& linear, const Rational& constant = 0);

/// σ-barycenter of ∂P minus μ-barycenter of P.
QVector futaki_vector(const Polytope& p);
bool is_zero_vector(const QVector& v);

Polytope translate(const Polytope& p, const QVector& t);
/// Image under an integer matrix with determinant ±1.
Polytope transform(const Polytope& p, const std::vector<std::vector<Integer>>& u);
Polytope scale(const Polytope& p, const Rational& k);
Polytope product(const Polytope& p, const Polytope& q);

/// Lines "n1 n2 [n3] <= c"; '#' starts a comment.
Polytope parse_polytope(std::string_view text);
std::string to_text(const Polytope& p);

struct ToricFamily {
  std::string id;
  std::vector<std::string> params;
  QVector anticanonical;
  /// Parameters held at their anticanonical value during a scan.
  std::vector<std::string> scan_fixed;
  /// Scans cover the closed grid [0, scan_bound] in each free parameter.
  Rational scan_bound;
  std::function<std::vector<Halfspace>(const QVector&)> halfspaces;
};

const std::vector<ToricFamily>& toric_families();
/// Throws DomainError for an unknown id.
const ToricFamily& toric_family(std::string_view id);

/// Throws OutOfRegion when the parameters leave the Kähler region.
Polytope class_to_polytope(const ToricFamily& family, const QVector& params);

/// Linear forms in the family parameters, e.g. "a + b + c - h".
std::vector<QVector> parse_linear_forms(const ToricFamily& family, const std::vector<std::string>& forms);

struct LocusCandidate {
  std::string text;
  std::vector<QVector> forms;
};

struct ScanPoint {
  QVector free_values;
  bool zero = false;
};

struct LocusSummary {
  std::string text;
  std::size_t on_locus = 0;
  std::size_t zero_on_locus = 0;
};

struct ScanResult {
  std::string family;
  std::vector<std::string> free_params;
  std::vector<ScanPoint> points;
  std::size_t skipped = 0;
  std::size_t zeros = 0;
  bool identically_zero = false;
  std::vector<LocusSummary> loci;
  /// Zero points on none of the candidate loci.
  std::size_t zeros_off_loci = 0;
  /// Candidate-locus points where the vector does not vanish.
  std::size_t nonzero_on_loci = 0;
  bool zero_set_equals_union = false;
};

ScanResult zero_locus_scan(const ToricFamily& family, const Rational& step, const std::vector<LocusCandidate>& loci,
                           unsigned jobs = 1);

/// Grid lines "a b c -> zero|nonzero" followed by the "locus:" block.
std::string format_scan(const ScanResult& scan);

}  // namespace futaki
