#include <algorithm>

#include "futaki/catalog.hpp"
#include "futaki/toric.hpp"

namespace futaki {

namespace {

class Collector {
 public:
  explicit Collector(const CaseRecord& r) : id_(r.id) {}
  void add(std::string message) { out_.push_back({id_, std::move(message)}); }
  std::vector<Finding> take() { return std::move(out_); }

 private:
  std::string id_;
  std::vector<Finding> out_;
};

QMatrix matrix_power(const QMatrix& m, unsigned k) {
  QMatrix out = QMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

bool is_permutation(const QMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t ones = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 1) {
        ++ones;
      } else if (!is_zero(m(r, c))) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t ones = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) ones += m(r, c) == 1;
    if (ones != 1) return false;
  }
  return true;
}

void check_singular(Collector& out, const CaseRecord& r, const std::string& what, const std::vector<UPoly>& singular) {
  const auto& excluded = excluded_values(r);
  const std::string var = r.ring && r.ring->params.has_parameter() ? r.ring->params.name() : "p";
  for (const auto& p : singular) {
    const UPoly rest = p.strip_roots(excluded);
    if (rest.degree() > 0)
      out.add(what + ": the solve is singular where " + rest.to_string(var) +
              " = 0, which the parameter exclusions do not cover");
  }
}

MonomialAutomorphism specialize(const MonomialAutomorphism& tau, const Rational& value, const RingPtr& target) {
  std::vector<RatFunc> scalars;
  for (const auto& c : tau.scalars()) scalars.emplace_back(c.evaluate(value));
  return MonomialAutomorphism(target, tau.factor_sources(), tau.sources(), std::move(scalars));
}

void check_orders(Collector& out, const FiniteEntry& f) {
  if (!f.map) return;
  if (!f.map->power(f.order).is_projective_identity()) {
    out.add(f.name + ": " + std::to_string(f.order) + "-th power is not the identity");
    return;
  }
  for (unsigned k = 1; k < f.order; ++k)
    if (f.map->power(k).is_projective_identity()) {
      out.add(f.name + ": declared order " + std::to_string(f.order) + " but the order is " + std::to_string(k));
      return;
    }
}

void validate_polynomial(Collector& out, const CaseRecord& r) {
  const auto& amb = r.ring->ambient;
  if (r.h11.size() != amb.factor_count() + r.centers.size())
    out.add("h11 has " + std::to_string(r.h11.size()) + " labels, expected " +
            std::to_string(amb.factor_count() + r.centers.size()) + " (one per factor and per center)");
  if (!r.picard || *r.picard != r.h11.size()) out.add("picard does not match the h11 label count");
  if (!r.anticanonical || r.anticanonical->size() != r.h11.size())
    out.add("anticanonical vector length does not match h11");

  for (const auto& t : r.torus) {
    for (std::size_t k = 0; k < r.equations.size(); ++k) {
      auto res = torus_eigencheck(r.equations[k], t.generator);
      if (!res.pass) out.add("torus " + t.name + " on equation " + std::to_string(k + 1) + ": " + res.diagnostic);
    }
    for (std::size_t c = 0; c < r.centers.size(); ++c) {
      const auto& pres = r.centers[c];
      for (const auto& g : pres.ideal) {
        auto res = torus_eigencheck(g, t.generator);
        if (!res.pass) out.add("torus " + t.name + " on center " + std::to_string(c + 1) + ": " + res.diagnostic);
      }
      if (pres.curve) {
        auto res = torus_eigencheck(*pres.curve, t.generator);
        if (!res.pass)
          out.add("torus " + t.name + " on center " + std::to_string(c + 1) + " curve: " + res.diagnostic);
      }
    }
  }
  if (!r.torus.empty()) {
    try {
      adjoint_matrix(MonomialAutomorphism::identity(r.ring), r.torus_generators());
    } catch (const DomainError& e) {
      out.add(std::string("torus: ") + e.what());
    }
  }

  for (std::size_t c = 0; c < r.centers.size(); ++c) {
    const auto& pres = r.centers[c];
    if (!pres.curve) continue;
    for (std::size_t k = 0; k < pres.ideal.size(); ++k)
      if (!restrict_to_curve(pres.ideal[k], *pres.curve).is_zero())
        out.add("center " + std::to_string(c + 1) + ": ideal generator " + std::to_string(k + 1) +
                " does not vanish on the curve");
    for (std::size_t k = 0; k < r.equations.size(); ++k)
      if (!restrict_to_curve(r.equations[k], *pres.curve).is_zero())
        out.add("center " + std::to_string(c + 1) + ": curve does not lie on equation " + std::to_string(k + 1));
  }

  const auto samples = r.ring->params.has_parameter() ? r.ring->params.sample_values(3) : std::vector<Rational>{};
  for (const auto& f : r.finite) {
    if (!f.map) {
      out.add(f.name + ": polynomial cases need map(...) symmetries");
      continue;
    }
    check_orders(out, f);
    if (!r.equations.empty()) {
      auto inv = check_variety_invariant(r.equations, *f.map);
      if (!inv.invariant) out.add(f.name + ": equations not preserved: " + inv.diagnostic);
      check_singular(out, r, f.name + " on the equations", inv.singular);
      for (const auto& v : samples) {
        auto ring_v = make_ring(amb);
        std::vector<MultiPoly> eqs;
        for (const auto& e : r.equations) eqs.push_back(e.specialize(v, ring_v));
        if (!check_variety_invariant(eqs, specialize(*f.map, v, ring_v)).invariant)
          out.add(f.name + ": equations not preserved at " + r.ring->params.name() + " = " + to_string(v));
      }
    }
    if (!r.centers.empty()) {
      try {
        auto m = match_centers(r.centers, *f.map);
        check_singular(out, r, f.name + " on the centers", m.singular);
      } catch (const UnmatchedCenter& e) {
        out.add(f.name + ": " + e.what());
      }
    }
  }
}

void validate_abstract(Collector& out, const CaseRecord& r) {
  if (!r.torus_rank) out.add("abstract case needs torus_rank");
  if (!r.picard || *r.picard != r.h11.size()) out.add("picard does not match the h11 label count");
  if (!r.anticanonical || r.anticanonical->size() != r.h11.size())
    out.add("anticanonical vector length does not match h11");
  const std::size_t rank = r.torus_rank.value_or(0);
  for (const auto& f : r.finite) {
    if (!f.adjoint || !f.h11) {
      out.add(f.name + ": abstract cases need adjoint and h11 matrices");
      continue;
    }
    if (f.adjoint->rows() != rank || f.adjoint->cols() != rank)
      out.add(f.name + ": adjoint matrix must be " + std::to_string(rank) + "x" + std::to_string(rank));
    if (f.h11->rows() != r.h11.size() || f.h11->cols() != r.h11.size())
      out.add(f.name + ": h11 matrix must be square of size " + std::to_string(r.h11.size()));
    else if (!is_permutation(*f.h11))
      out.add(f.name + ": h11 matrix is not a permutation matrix");
    if (f.adjoint->is_square() && f.h11->is_square()) {
      for (unsigned k = 1; k <= f.order; ++k) {
        const bool id = matrix_power(*f.adjoint, k) == QMatrix::identity(f.adjoint->rows()) &&
                        matrix_power(*f.h11, k) == QMatrix::identity(f.h11->rows());
        if (id != (k == f.order)) {
          out.add(f.name + ": matrices do not have order " + std::to_string(f.order));
          break;
        }
      }
    }
    for (const std::string part : {".adjoint", ".h11"}) {
      const std::string target = f.name + part;
      if (std::none_of(r.justify.begin(), r.justify.end(), [&](const Justification& j) { return j.target == target; }))
        out.add("missing justify " + target);
    }
  }
}

void validate_toric(Collector& out, const CaseRecord& r) {
  std::size_t product_params = 0;
  QVector product_anticanonical;
  for (const auto& f : r.factors) {
    try {
      const auto& fam = toric_family(f);
      product_params += fam.params.size();
      product_anticanonical.insert(product_anticanonical.end(), fam.anticanonical.begin(), fam.anticanonical.end());
    } catch (const DomainError& e) {
      out.add(std::string("factor: ") + e.what());
    }
  }
  if (r.kind == CaseKind::product) {
    if (r.factors.empty()) out.add("product case needs at least one factor");
    if (!r.anticanonical || r.anticanonical->size() != product_params)
      out.add("anticanonical vector length does not match the factor parameters");
    else if (*r.anticanonical != product_anticanonical)
      out.add("anticanonical vector differs from the factors' anticanonical parameters");
  }
  if (r.kind == CaseKind::toric_crosscheck && r.toric.empty()) out.add("toric-crosscheck case needs 'toric'");
  if (!r.toric.empty()) {
    try {
      const auto& fam = toric_family(r.toric);
      QVector params;
      if (r.toric_params) {
        params = *r.toric_params;
      } else if (r.anticanonical && r.kind != CaseKind::polynomial) {
        params = *r.anticanonical;
      } else {
        params = fam.anticanonical;
      }
      if (params.size() != fam.params.size()) {
        out.add("toric parameters have " + std::to_string(params.size()) + " entries, family " + fam.id + " has " +
                std::to_string(fam.params.size()));
      } else {
        class_to_polytope(fam, params);
      }
    } catch (const DomainError& e) {
      out.add(std::string("toric: ") + e.what());
    }
  }
  for (const auto& l : r.loci) {
    try {
      parse_linear_forms(toric_family(l.family), l.forms);
    } catch (const Error& e) {
      out.add("locus " + l.family + ": " + e.what());
    }
  }
}

}  // namespace

std::vector<Finding> validate_case(const CaseRecord& r) {
  Collector out(r);
  using K = ExpectedVerdict::Kind;
  const auto expected = r.expected.value_or(ExpectedVerdict{});
  switch (r.kind) {
    case CaseKind::polynomial:
      if (!r.ring) {
        out.add("polynomial case without ambient");
        break;
      }
      try {
        validate_polynomial(out, r);
      } catch (const Error& e) {
        out.add(std::string("check aborted: ") + e.what());
      }
      break;
    case CaseKind::abstract:
      validate_abstract(out, r);
      break;
    case CaseKind::semisimple_full:
      if (r.semisimple.empty()) out.add("semisimple_full case needs a semisimple tag");
      if (expected.kind != K::full_cone) out.add("semisimple_full case must expect full_cone");
      if (!r.picard) out.add("semisimple_full case needs picard");
      break;
    case CaseKind::product:
    case CaseKind::toric_crosscheck:
      break;
  }
  validate_toric(out, r);
  if (expected.kind == K::see_toric) {
    if (r.toric.empty()) out.add("see_toric needs a toric family");
    if (r.expect_adjoint.empty() || r.expect_toric.empty()) out.add("see_toric needs expect_adjoint and expect_toric");
  }
  if (expected.kind == K::subcone && expected.dim == 0) out.add("subcone dimension must be positive");
  if (r.aut.empty()) out.add("missing aut note");
  return out.take();
}

std::vector<Finding> validate_catalog(const Catalog& catalog) {
  std::vector<Finding> out;
  for (const auto& r : catalog.records) {
    auto f = validate_case(r);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

}  // namespace futaki
