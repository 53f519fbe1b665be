#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "futaki/matrix.hpp"
#include "futaki/ratfunc.hpp"

namespace futaki {

/// Syntax or symbol error in polynomial or catalog text.  `column` is
/// 1-based within the text handed to the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column) : Error(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class InhomogeneousError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct ProjectiveFactor {
  std::vector<std::string> coords;
  std::size_t dimension() const { return coords.size() - 1; }
  friend bool operator==(const ProjectiveFactor&, const ProjectiveFactor&) = default;
};

/// Product of projective spaces with named homogeneous coordinates.
class AmbientSpace {
 public:
  AmbientSpace() = default;
  explicit AmbientSpace(std::vector<ProjectiveFactor> factors);

  std::size_t factor_count() const { return factors_.size(); }
  std::size_t coord_count() const { return factor_of_.size(); }
  const ProjectiveFactor& factor(std::size_t f) const { return factors_.at(f); }
  const std::vector<ProjectiveFactor>& factors() const { return factors_; }
  std::size_t factor_of(std::size_t coord) const { return factor_of_.at(coord); }
  std::size_t offset(std::size_t f) const { return offsets_.at(f); }
  const std::string& coord_name(std::size_t i) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// "P2(x, y, z) x P2(u, v, w)"
  std::string to_string() const;

  friend bool operator==(const AmbientSpace& a, const AmbientSpace& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<ProjectiveFactor> factors_;
  std::vector<std::size_t> factor_of_;
  std::vector<std::size_t> offsets_;
};

AmbientSpace parse_ambient(std::string_view text);

/// The declared parameter (at most one) and its excluded values.
class ParamField {
 public:
  ParamField() = default;
  ParamField(std::string name, std::vector<Rational> excluded);

  bool has_parameter() const { return !name_.empty(); }
  const std::string& name() const { return name_; }
  const std::vector<Rational>& excluded() const { return excluded_; }
  bool admissible(const Rational& value) const;

  /// First admissible members of 1/2, 2, 3, 1/3, 5, 1/5, 7, ...
  std::vector<Rational> sample_values(std::size_t count) const;

  friend bool operator==(const ParamField&, const ParamField&) = default;

 private:
  std::string name_;
  std::vector<Rational> excluded_;
};

struct PolyRing {
  AmbientSpace ambient;
  ParamField params;
};
using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(AmbientSpace ambient, ParamField params = {});

using Exponents = std::vector<int>;
struct DescendingLex {
  bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};
using TermMap = std::map<Exponents, RatFunc, DescendingLex>;

/// Multihomogeneous polynomial with coefficients in Q(p).  Terms are kept in
/// descending lexicographic order of exponent vectors with no zero
/// coefficients; all terms share one multidegree.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring);

  static MultiPoly from_terms(RingPtr ring, TermMap terms);
  static MultiPoly constant(RingPtr ring, const RatFunc& c);
  static MultiPoly variable(RingPtr ring, std::size_t coord);

  const RingPtr& ring() const { return ring_; }
  const AmbientSpace& ambient() const { return ring_->ambient; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Per-factor degree; all zeros for the zero polynomial.
  const std::vector<int>& multidegree() const { return degree_; }
  RatFunc coefficient(const Exponents& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const RatFunc& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;

  /// Evaluates the parameter, giving a polynomial over Q on a parameter-free ring.
  MultiPoly specialize(const Rational& value, RingPtr target) const;

  /// Canonical text; parse_poly(to_string()) reproduces the polynomial.
  std::string to_string() const;

 private:
  MultiPoly(RingPtr ring, TermMap terms, std::vector<int> degree);
  RingPtr ring_;
  TermMap terms_;
  std::vector<int> degree_;
};

/// Parses the catalog polynomial syntax: + - * / ^, parentheses, integer
/// literals, coordinate and parameter names.  Division is allowed only by
/// coordinate-free expressions.  Throws ParseError (syntax, unknown symbol)
/// or InhomogeneousError.
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);

std::vector<int> multidegree(const MultiPoly& p);

/// p(images[0], images[1], ...) with the images living on `target`.
MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images, const RingPtr& target);

class MonomialAutomorphism;

/// p ∘ τ in canonical form.
MultiPoly pullback(const MultiPoly& p, const MonomialAutomorphism& tau);

struct SpanResult {
  /// Coefficients c with p = Σ c_i gens_i, when they exist.
  std::optional<std::vector<RatFunc>> coefficients;
  /// Monic polynomials in the parameter whose roots make the solve invalid
  /// (coefficient denominators and vanishing pivots).
  std::vector<UPoly> singular;
  /// Rational roots of `singular`, ascending.
  std::vector<Rational> singular_values;
};

/// Linear span membership over Q(p).
SpanResult in_span(const MultiPoly& p, const std::vector<MultiPoly>& gens);

void require_same_ambient(const AmbientSpace& a, const AmbientSpace& b, std::string_view what);

/// Collects singular polynomials, keeping one monic copy of each.
void add_singular(std::vector<UPoly>& out, const UPoly& poly);
std::vector<Rational> rational_roots(const std::vector<UPoly>& polys);

}  // namespace futaki
