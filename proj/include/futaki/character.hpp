#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "futaki/matrix.hpp"

namespace futaki {

/// Permutation matrix M of τ* on H^{1,1} in the basis (hyperplane class per
/// factor, then one exceptional class per center): τ*(h_f) = h_{δ(f)} and
/// τ*(E_{ρ(i)}) = E_i.  Column j holds the image of basis vector j.
QMatrix h11_action(const std::vector<std::size_t>& factor_source, const std::vector<std::size_t>& center_perm);

struct SymmetryData {
  std::string name;
  /// A_τ, absent when the adjoint solve failed.
  std::optional<QMatrix> adjoint;
  std::string diagnostic;
  QMatrix h11;
  bool usable() const { return adjoint.has_value(); }
};

struct ConstraintSystem {
  std::size_t torus_rank = 0;
  std::vector<std::string> semisimple;
  bool semisimple_full = false;
  std::size_t h11_dim = 0;
  std::vector<SymmetryData> symmetries;
};

struct FullCone {
  std::vector<std::string> certificate;
  std::size_t dim = 0;
};

struct SubconeComponent {
  std::vector<QVector> basis;
  std::vector<std::string> certificate;
  std::size_t dim() const { return basis.size(); }
};

struct Subcone {
  std::vector<SubconeComponent> components;
  std::size_t max_dim() const;
};

struct Inconclusive {
  std::vector<std::string> diagnostics;
};

using Verdict = std::variant<FullCone, Subcone, Inconclusive>;

struct SubsetReport {
  std::vector<std::string> names;
  bool usable = true;
  std::size_t fixed_dim = 0;
  std::size_t kernel_dim = 0;
  bool vanishes() const { return usable && kernel_dim == 0; }
};

struct VerdictReport {
  Verdict verdict;
  std::vector<SubsetReport> subsets;
};

/// Fix(S) = common +1 eigenspace of the H^{1,1} actions.
std::vector<QVector> fixed_classes(const ConstraintSystem& sys, const std::vector<std::size_t>& subset);
/// K_S = ∩ ker(A_τᵀ − I) over the subset.
std::vector<QVector> surviving_characters(const ConstraintSystem& sys, const std::vector<std::size_t>& subset);

VerdictReport vanishing_verdict(const ConstraintSystem& sys);

/// Verdict of a product from the verdicts of its factors and their class
/// space dimensions; components combine as direct sums.
Verdict product_verdict(const std::vector<Verdict>& factors, const std::vector<std::size_t>& dims);

/// Subcone spanned by the common zero sets of the given linear forms (one
/// component per list of forms), or FullCone when a list is empty.
Verdict verdict_from_loci(const std::vector<std::vector<QVector>>& loci, std::size_t dim, const std::string& cert);

std::string tag(const Verdict& v);
/// Largest dimension of a vanishing family (full dimension for FullCone, 0 when inconclusive).
std::size_t vanishing_dim(const Verdict& v);
/// True when some component contains `c`.
bool contains(const Verdict& v, const QVector& c);

/// "FullCone dim=2 cert={sigma,tau}" and similar.
std::string to_string(const Verdict& v);

}  // namespace futaki
