#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "futaki/automorphism.hpp"

namespace futaki {

/// One-parameter diagonal action λ ↦ [λ^{w_0} x_0 : ...], kept in canonical
/// form: the first weight of every factor is 0.
class TorusGenerator {
 public:
  TorusGenerator(const AmbientSpace& ambient, std::vector<Integer> raw_weights);

  const std::vector<Integer>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  QVector as_rational() const;

  friend bool operator==(const TorusGenerator&, const TorusGenerator&) = default;

 private:
  std::vector<Integer> weights_;
};

/// Map P1 -> ambient.  Coordinates live on a P1 ring (two coordinates,
/// same parameter field as the ambient ring).
struct ParamCurve {
  RingPtr curve_ring;
  std::vector<MultiPoly> coords;
  /// (r,s)-degree of each ambient factor.
  std::vector<int> factor_degrees;
  std::vector<std::size_t> coord_factor;
};

/// Validates shapes and per-factor degrees; throws DomainError.
ParamCurve make_param_curve(const AmbientSpace& ambient, RingPtr curve_ring, std::vector<MultiPoly> coords);

/// Image of the curve under τ: coordinate i becomes c_i · φ_{σ(i)}.
std::vector<MultiPoly> apply_to_curve(const MonomialAutomorphism& tau, const ParamCurve& phi);

/// Substitutes the curve into p.
MultiPoly restrict_to_curve(const MultiPoly& p, const ParamCurve& phi);

struct SubvarietyPresentation {
  std::vector<MultiPoly> ideal;
  std::optional<ParamCurve> curve;
  int stage = 1;

  bool has_ideal() const { return !ideal.empty(); }
  bool has_curve() const { return curve.has_value(); }
};

struct InvarianceResult {
  bool invariant = false;
  /// Column k: coordinates of pullback(gen_k) in the generators.
  std::optional<Matrix<RatFunc>> coefficients;
  std::vector<UPoly> singular;
  std::string diagnostic;
};

InvarianceResult check_variety_invariant(const std::vector<MultiPoly>& gens, const MonomialAutomorphism& tau);

/// τ ∘ source = diag(scalars) · (target ∘ ψ).
struct CurveMatch {
  MonomialAutomorphism psi;
  std::vector<RatFunc> scalars;  // one per ambient factor
};

std::optional<CurveMatch> match_curves(const ParamCurve& target, const ParamCurve& source,
                                       const MonomialAutomorphism& tau);

inline std::optional<CurveMatch> check_curve_equivariance(const ParamCurve& phi, const MonomialAutomorphism& tau) {
  return match_curves(phi, phi, tau);
}

class UnmatchedCenter : public Error {
 public:
  UnmatchedCenter(std::size_t index, const std::string& what) : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct CenterMatching {
  /// τ maps center i onto center perm[i].
  std::vector<std::size_t> perm;
  std::vector<UPoly> singular;
};

CenterMatching match_centers(const std::vector<SubvarietyPresentation>& centers, const MonomialAutomorphism& tau);

struct EigenResult {
  bool pass = true;
  std::string diagnostic;
};

EigenResult torus_eigencheck(const MultiPoly& gen, const TorusGenerator& v);
EigenResult torus_eigencheck(const ParamCurve& phi, const TorusGenerator& v);

struct AdjointResult {
  std::optional<QMatrix> matrix;
  std::string diagnostic;
};

/// Solves w_j∘σ = Σ_i A_ij w_i + (per-factor constants).  Throws DomainError
/// when the generators are dependent modulo constants.
AdjointResult adjoint_matrix(const MonomialAutomorphism& tau, const std::vector<TorusGenerator>& torus);

}  // namespace futaki
