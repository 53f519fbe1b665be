#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "futaki/poly.hpp"

namespace futaki {

/// Generalized permutation of homogeneous coordinates:
///   τ(x)_i = scalar(i) · x_{source(i)}.
/// Target factor f is fed by the coordinates of factor factor_source(f).
class MonomialAutomorphism {
 public:
  MonomialAutomorphism(RingPtr ring, std::vector<std::size_t> factor_source,
                       std::vector<std::size_t> source, std::vector<RatFunc> scalars);

  static MonomialAutomorphism identity(const RingPtr& ring);

  /// Builds τ from the image of every coordinate, each of the form c·x_j.
  static MonomialAutomorphism from_images(const RingPtr& ring, const std::vector<MultiPoly>& images,
                                          std::vector<std::size_t> factor_source);

  const RingPtr& ring() const { return ring_; }
  const AmbientSpace& ambient() const { return ring_->ambient; }
  std::size_t source(std::size_t i) const { return source_.at(i); }
  const std::vector<std::size_t>& sources() const { return source_; }
  const RatFunc& scalar(std::size_t i) const { return scalars_.at(i); }
  const std::vector<RatFunc>& scalars() const { return scalars_; }
  std::size_t factor_source(std::size_t f) const { return factor_source_.at(f); }
  const std::vector<std::size_t>& factor_sources() const { return factor_source_; }

  /// Same permutation with different scalars.
  MonomialAutomorphism with_scalars(std::vector<RatFunc> scalars) const;

  /// Per-coordinate images c_i·x_{σ(i)}.
  std::vector<MultiPoly> images() const;

  /// Equal to the identity as a projective map: σ = id and the scalars are
  /// constant on every factor.
  bool is_projective_identity() const;

  MonomialAutomorphism power(unsigned k) const;
  MonomialAutomorphism inverse() const;

  /// "map(x1, x0, ...)", followed by " factors = (1, 0)" when factors move.
  std::string to_string() const;

  friend bool operator==(const MonomialAutomorphism& a, const MonomialAutomorphism& b);

 private:
  RingPtr ring_;
  std::vector<std::size_t> factor_source_;
  std::vector<std::size_t> source_;
  std::vector<RatFunc> scalars_;
};

/// a ∘ b (apply b first).
MonomialAutomorphism compose(const MonomialAutomorphism& a, const MonomialAutomorphism& b);

/// Equality as maps of projective spaces (scalars compared per factor
/// by cross-multiplication).
bool projectively_equal(const MonomialAutomorphism& a, const MonomialAutomorphism& b);

}  // namespace futaki
