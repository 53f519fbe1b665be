#include "futaki/symmetry.hpp"

#include <algorithm>
#include <functional>

namespace futaki {

namespace {

std::string monomial_text(const AmbientSpace& amb, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += amb.coord_name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string index_list(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

// Shift each factor block so that its first entry is 0.
template <class T>
void canonicalize_blocks(const AmbientSpace& amb, std::vector<T>& w) {
  for (std::size_t f = 0; f < amb.factor_count(); ++f) {
    const std::size_t off = amb.offset(f);
    const T base = w[off];
    for (std::size_t k = 0; k < amb.factor(f).coords.size(); ++k) w[off + k] -= base;
  }
}

MultiPoly rebase(const MultiPoly& p, const RingPtr& ring) {
  if (p.ring() == ring) return p;
  if (p.ambient().coord_count() != ring->ambient.coord_count()) throw DomainError("curve rings differ in shape");
  return MultiPoly::from_terms(ring, p.terms());
}

}  // namespace

TorusGenerator::TorusGenerator(const AmbientSpace& ambient, std::vector<Integer> raw_weights)
    : weights_(std::move(raw_weights)) {
  if (weights_.size() != ambient.coord_count())
    throw DomainError("torus weight has " + std::to_string(weights_.size()) + " entries, ambient has " +
                      std::to_string(ambient.coord_count()) + " coordinates");
  canonicalize_blocks(ambient, weights_);
}

QVector TorusGenerator::as_rational() const {
  QVector out;
  out.reserve(weights_.size());
  for (const auto& w : weights_) out.emplace_back(w);
  return out;
}

ParamCurve make_param_curve(const AmbientSpace& ambient, RingPtr curve_ring, std::vector<MultiPoly> coords) {
  if (curve_ring->ambient.factor_count() != 1 || curve_ring->ambient.coord_count() != 2)
    throw DomainError("curve parameters must form a single P1");
  if (coords.size() != ambient.coord_count())
    throw DomainError("curve has " + std::to_string(coords.size()) + " coordinates, ambient has " +
                      std::to_string(ambient.coord_count()));
  std::vector<int> degrees(ambient.factor_count(), -1);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    require_same_ambient(coords[i].ambient(), curve_ring->ambient, "curve coordinate");
    if (coords[i].is_zero()) continue;
    const int d = coords[i].multidegree()[0];
    int& slot = degrees[ambient.factor_of(i)];
    if (slot >= 0 && slot != d)
      throw InhomogeneousError("curve coordinates of one factor have different degrees");
    slot = d;
  }
  for (std::size_t f = 0; f < degrees.size(); ++f)
    if (degrees[f] < 0) throw DomainError("curve coordinates of factor " + std::to_string(f) + " are all zero");
  std::vector<std::size_t> coord_factor(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coord_factor[i] = ambient.factor_of(i);
  return ParamCurve{std::move(curve_ring), std::move(coords), std::move(degrees), std::move(coord_factor)};
}

std::vector<MultiPoly> apply_to_curve(const MonomialAutomorphism& tau, const ParamCurve& phi) {
  std::vector<MultiPoly> out;
  out.reserve(phi.coords.size());
  for (std::size_t i = 0; i < phi.coords.size(); ++i) out.push_back(tau.scalar(i) * phi.coords[tau.source(i)]);
  return out;
}

MultiPoly restrict_to_curve(const MultiPoly& p, const ParamCurve& phi) {
  return compose(p, phi.coords, phi.curve_ring);
}

InvarianceResult check_variety_invariant(const std::vector<MultiPoly>& gens, const MonomialAutomorphism& tau) {
  InvarianceResult result;
  Matrix<RatFunc> coeffs(gens.size(), gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    require_same_ambient(gens[k].ambient(), tau.ambient(), "invariance check");
    const MultiPoly image = pullback(gens[k], tau);
    auto span = in_span(image, gens);
    for (const auto& s : span.singular) add_singular(result.singular, s);
    if (!span.coefficients) {
      result.diagnostic = "pullback of generator " + std::to_string(k + 1) + " (" + image.to_string() +
                          ") is not in the span of the generators";
      return result;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) coeffs(i, k) = (*span.coefficients)[i];
  }
  result.invariant = true;
  result.coefficients = std::move(coeffs);
  return result;
}

namespace {

// Candidate values of γ for ψ of the given kind, read off coefficient ratios.
std::vector<RatFunc> gamma_candidates(const AmbientSpace& amb, const std::vector<MultiPoly>& lhs,
                                      const ParamCurve& target, bool swap) {
  std::vector<RatFunc> out{RatFunc(1)};
  for (std::size_t f = 0; f < amb.factor_count(); ++f) {
    const int d = target.factor_degrees[f];
    std::vector<std::pair<int, RatFunc>> ratios;  // (γ exponent, b/a)
    for (std::size_t k = 0; k < amb.factor(f).coords.size(); ++k) {
      const std::size_t i = amb.offset(f) + k;
      for (const auto& [e, a] : target.coords[i].terms()) {
        const int se = e[1];
        const Exponents moved = swap ? Exponents{se, d - se} : e;
        const RatFunc b = lhs[i].coefficient(moved);
        if (b.is_zero()) continue;
        ratios.emplace_back(se, b / a);
      }
    }
    for (std::size_t x = 0; x < ratios.size(); ++x)
      for (std::size_t y = x + 1; y < ratios.size(); ++y) {
        int gap = ratios[y].first - ratios[x].first;
        if (gap == 0) continue;
        RatFunc q = ratios[y].second / ratios[x].second;
        if (gap < 0) {
          gap = -gap;
          q = RatFunc(1) / q;
        }
        std::vector<RatFunc> found;
        if (gap == 1) {
          found.push_back(q);
        } else if (q.is_constant()) {
          std::vector<Rational> c(static_cast<std::size_t>(gap) + 1, Rational(0));
          c[0] = -q.constant_value();
          c[static_cast<std::size_t>(gap)] = 1;
          for (const auto& root : UPoly(c).rational_roots()) found.emplace_back(root);
        }
        for (const auto& g : found)
          if (!g.is_zero() && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
        if (!found.empty()) return out;
      }
  }
  return out;
}

}  // namespace

std::optional<CurveMatch> match_curves(const ParamCurve& target, const ParamCurve& source,
                                       const MonomialAutomorphism& tau) {
  const auto& amb = tau.ambient();
  const RingPtr& ring = target.curve_ring;
  ParamCurve src = source;
  for (auto& c : src.coords) c = rebase(c, ring);
  src.curve_ring = ring;
  for (std::size_t f = 0; f < amb.factor_count(); ++f)
    if (src.factor_degrees[tau.factor_source(f)] != target.factor_degrees[f]) return std::nullopt;
  const std::vector<MultiPoly> lhs = apply_to_curve(tau, src);
  const auto r = MultiPoly::variable(ring, 0);
  const auto s = MultiPoly::variable(ring, 1);

  for (const bool swap : {false, true}) {
    for (const auto& gamma : gamma_candidates(amb, lhs, target, swap)) {
      const std::vector<MultiPoly> images = swap ? std::vector<MultiPoly>{s, gamma * r}
                                                 : std::vector<MultiPoly>{r, gamma * s};
      auto psi = MonomialAutomorphism::from_images(ring, images, {0});
      std::vector<RatFunc> scalars;
      bool ok = true;
      for (std::size_t f = 0; f < amb.factor_count() && ok; ++f) {
        const std::size_t begin = amb.offset(f);
        const std::size_t end = begin + amb.factor(f).coords.size();
        std::vector<MultiPoly> rhs;
        for (std::size_t i = begin; i < end; ++i) rhs.push_back(compose(target.coords[i], images, ring));
        std::size_t k0 = 0;
        while (k0 < rhs.size() && rhs[k0].is_zero()) ++k0;
        const MultiPoly& l0 = lhs[begin + k0];
        if (l0.is_zero() || l0.terms().begin()->first != rhs[k0].terms().begin()->first) {
          ok = false;
          break;
        }
        const RatFunc a = rhs[k0].terms().begin()->second;
        const RatFunc b = l0.terms().begin()->second;
        for (std::size_t k = 0; k < rhs.size() && ok; ++k) ok = (a * lhs[begin + k] == b * rhs[k]);
        scalars.push_back(b / a);
      }
      if (ok) return CurveMatch{std::move(psi), std::move(scalars)};
    }
  }
  return std::nullopt;
}

CenterMatching match_centers(const std::vector<SubvarietyPresentation>& centers, const MonomialAutomorphism& tau) {
  const std::size_t n = centers.size();
  CenterMatching result;
  // compatible[i][j]: τ maps center i into center j.
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ci = centers[i];
      const auto& cj = centers[j];
      if (ci.stage != cj.stage) continue;
      bool ok = false;
      if (ci.has_ideal() && cj.has_ideal()) {
        if (ci.ideal.size() != cj.ideal.size()) continue;
        ok = true;
        std::vector<UPoly> singular;
        for (const auto& g : cj.ideal) {
          auto span = in_span(pullback(g, tau), ci.ideal);
          for (const auto& p : span.singular) add_singular(singular, p);
          if (!span.coefficients) {
            ok = false;
            break;
          }
        }
        if (ok)
          for (const auto& p : singular) add_singular(result.singular, p);
      } else if (ci.has_curve() && cj.has_curve()) {
        ok = match_curves(*cj.curve, *ci.curve, tau).has_value();
      } else if (ci.has_curve() && cj.has_ideal()) {
        ok = std::all_of(cj.ideal.begin(), cj.ideal.end(), [&](const MultiPoly& g) {
          return restrict_to_curve(pullback(g, tau), *ci.curve).is_zero();
        });
      }
      compatible[i][j] = ok;
    }
    if (std::none_of(compatible[i].begin(), compatible[i].end(), [](bool b) { return b; }))
      throw UnmatchedCenter(i, "center " + std::to_string(i + 1) + " is not mapped onto any center");
  }

  std::vector<std::size_t> perm(n, n);
  std::vector<bool> used(n, false);
  std::size_t deepest = 0;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    deepest = std::max(deepest, i);
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !compatible[i][j]) continue;
      used[j] = true;
      perm[i] = j;
      if (assign(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!assign(0))
    throw UnmatchedCenter(deepest, "centers cannot be permuted consistently (stuck at center " +
                                       std::to_string(deepest + 1) + ")");
  result.perm = std::move(perm);
  return result;
}

EigenResult torus_eigencheck(const MultiPoly& gen, const TorusGenerator& v) {
  const auto& amb = gen.ambient();
  if (v.size() != amb.coord_count()) throw DomainError("torus weight length mismatch");
  std::optional<std::pair<Integer, Exponents>> first;
  for (const auto& [e, c] : gen.terms()) {
    Integer w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += v.weights()[i] * e[i];
    if (!first) {
      first.emplace(w, e);
    } else if (w != first->first) {
      return {false, "monomials " + monomial_text(amb, first->second) + " (weight " + first->first.get_str() +
                         ") and " + monomial_text(amb, e) + " (weight " + w.get_str() + ") differ"};
    }
  }
  return {};
}

EigenResult torus_eigencheck(const ParamCurve& phi, const TorusGenerator& v) {
  // Unknowns: k (weight per unit of s-degree), then one constant per factor.
  const std::size_t nf = phi.factor_degrees.size();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < phi.coords.size(); ++i) {
    const auto& c = phi.coords[i];
    if (c.is_zero()) continue;
    const int se = c.terms().begin()->first[1];
    for (const auto& [e, x] : c.terms())
      if (e[1] != se) return {false, "curve coordinate " + std::to_string(i + 1) + " is not a monomial in (r,s)"};
    std::vector<Rational> row(nf + 1, Rational(0));
    row[0] = se;
    row[1 + phi.coord_factor[i]] = 1;
    rows.push_back(std::move(row));
    rhs.emplace_back(v.weights()[i]);
  }
  if (rows.empty() || solve<Rational>(QMatrix::from_rows(rows), std::span<const Rational>(rhs))) return {};
  return {false, "coordinate weights are not an affine function of the curve's s-degree"};
}

AdjointResult adjoint_matrix(const MonomialAutomorphism& tau, const std::vector<TorusGenerator>& torus) {
  const auto& amb = tau.ambient();
  const std::size_t n = amb.coord_count();
  const std::size_t r = torus.size();
  const std::size_t nf = amb.factor_count();
  QMatrix m(n, r + nf);
  for (std::size_t j = 0; j < r; ++j) {
    if (torus[j].size() != n) throw DomainError("torus weight length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = torus[j].weights()[i];
  }
  for (std::size_t i = 0; i < n; ++i) m(i, r + amb.factor_of(i)) = 1;
  if (rank(m) != r + nf) throw DomainError("torus generators are dependent modulo per-factor constants");

  QMatrix a(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    QVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = torus[j].weights()[tau.source(i)];
    const auto x = solve<Rational>(m, std::span<const Rational>(u));
    if (!x) {
      canonicalize_blocks(amb, u);
      return {std::nullopt, "w" + std::to_string(j + 1) + "∘σ = " + index_list(u) +
                                " is not in the span of the torus weights modulo per-factor constants"};
    }
    for (std::size_t i = 0; i < r; ++i) a(i, j) = (*x)[i];
  }
  return {std::move(a), {}};
}

}  // namespace futaki
