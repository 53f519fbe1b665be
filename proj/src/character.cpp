#include "futaki/character.hpp"

#include <algorithm>

namespace futaki {

QMatrix h11_action(const std::vector<std::size_t>& factor_source, const std::vector<std::size_t>& center_perm) {
  const std::size_t nf = factor_source.size();
  const std::size_t n = nf + center_perm.size();
  QMatrix m(n, n);
  for (std::size_t f = 0; f < nf; ++f) m(factor_source[f], f) = 1;
  for (std::size_t i = 0; i < center_perm.size(); ++i) m(nf + i, nf + center_perm[i]) = 1;
  return m;
}

std::size_t Subcone::max_dim() const {
  std::size_t best = 0;
  for (const auto& c : components) best = std::max(best, c.dim());
  return best;
}

std::vector<QVector> fixed_classes(const ConstraintSystem& sys, const std::vector<std::size_t>& subset) {
  std::vector<QMatrix> blocks;
  for (auto k : subset) blocks.push_back(sys.symmetries.at(k).h11 - QMatrix::identity(sys.h11_dim));
  return common_kernel(blocks, sys.h11_dim);
}

std::vector<QVector> surviving_characters(const ConstraintSystem& sys, const std::vector<std::size_t>& subset) {
  std::vector<QMatrix> blocks;
  for (auto k : subset) {
    const auto& s = sys.symmetries.at(k);
    if (!s.adjoint) throw DomainError("symmetry " + s.name + " has no adjoint matrix");
    blocks.push_back(s.adjoint->transposed() - QMatrix::identity(sys.torus_rank));
  }
  return common_kernel(blocks, sys.torus_rank);
}

namespace {

// All subsets of {0..n-1}, by size and then lexicographically.
std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i);
      out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::vector<QVector> identity_basis(std::size_t n) {
  std::vector<QVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    QVector v(n, Rational(0));
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

VerdictReport vanishing_verdict(const ConstraintSystem& sys) {
  VerdictReport report;
  if (sys.semisimple_full) {
    report.verdict = FullCone{{"semisimple"}, sys.h11_dim};
    return report;
  }
  std::vector<std::pair<std::vector<std::size_t>, std::vector<QVector>>> vanishing;
  for (const auto& subset : subsets_by_size(sys.symmetries.size())) {
    SubsetReport row;
    for (auto k : subset) {
      row.names.push_back(sys.symmetries[k].name);
      row.usable = row.usable && sys.symmetries[k].usable();
    }
    auto fix = fixed_classes(sys, subset);
    row.fixed_dim = fix.size();
    if (row.usable) row.kernel_dim = surviving_characters(sys, subset).size();
    if (row.vanishes()) vanishing.emplace_back(subset, std::move(fix));
    report.subsets.push_back(std::move(row));
  }

  auto names_of = [&](const std::vector<std::size_t>& subset) {
    std::vector<std::string> names;
    for (auto k : subset) names.push_back(sys.symmetries[k].name);
    return names;
  };

  for (const auto& [subset, fix] : vanishing)
    if (fix.size() == sys.h11_dim) {
      report.verdict = FullCone{names_of(subset), sys.h11_dim};
      return report;
    }

  std::size_t best = 0;
  for (const auto& [subset, fix] : vanishing) best = std::max(best, fix.size());
  if (best > 0) {
    Subcone sub;
    for (const auto& [subset, fix] : vanishing) {
      if (fix.size() != best) continue;
      const bool seen = std::any_of(sub.components.begin(), sub.components.end(),
                                    [&](const SubconeComponent& c) { return c.basis == fix; });
      if (!seen) sub.components.push_back({fix, names_of(subset)});
    }
    report.verdict = std::move(sub);
    return report;
  }

  Inconclusive inc;
  for (const auto& s : sys.symmetries)
    if (!s.usable()) inc.diagnostics.push_back(s.name + ": " + s.diagnostic);
  inc.diagnostics.push_back(sys.symmetries.empty() ? "no finite symmetries to constrain the torus characters"
                                                   : "no symmetry subset kills the torus characters");
  report.verdict = std::move(inc);
  return report;
}

Verdict product_verdict(const std::vector<Verdict>& factors, const std::vector<std::size_t>& dims) {
  if (factors.size() != dims.size()) throw DomainError("product_verdict: dimension list mismatch");
  Inconclusive inc;
  for (const auto& v : factors)
    if (const auto* i = std::get_if<Inconclusive>(&v))
      inc.diagnostics.insert(inc.diagnostics.end(), i->diagnostics.begin(), i->diagnostics.end());
  if (!inc.diagnostics.empty()) return inc;

  std::size_t total = 0;
  for (auto d : dims) total += d;
  bool all_full = true;
  std::vector<SubconeComponent> acc{SubconeComponent{}};
  std::size_t offset = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<SubconeComponent> parts;
    if (const auto* f = std::get_if<FullCone>(&factors[k])) {
      parts.push_back({identity_basis(dims[k]), f->certificate});
    } else {
      all_full = false;
      parts = std::get<Subcone>(factors[k]).components;
    }
    std::vector<SubconeComponent> next;
    for (const auto& left : acc)
      for (const auto& right : parts) {
        SubconeComponent c = left;
        for (const auto& v : right.basis) {
          if (v.size() != dims[k]) throw DomainError("product_verdict: basis length mismatch");
          QVector e(total, Rational(0));
          std::copy(v.begin(), v.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
          c.basis.push_back(std::move(e));
        }
        for (const auto& name : right.certificate)
          if (std::find(c.certificate.begin(), c.certificate.end(), name) == c.certificate.end())
            c.certificate.push_back(name);
        next.push_back(std::move(c));
      }
    acc = std::move(next);
    offset += dims[k];
  }
  if (all_full) return FullCone{acc.front().certificate, total};
  return Subcone{std::move(acc)};
}

Verdict verdict_from_loci(const std::vector<std::vector<QVector>>& loci, std::size_t dim, const std::string& cert) {
  Subcone sub;
  for (const auto& forms : loci) {
    if (forms.empty()) return FullCone{{cert}, dim};
    std::vector<QVector> basis = kernel_basis(QMatrix::from_rows(forms));
    if (basis.empty()) continue;
    sub.components.push_back({std::move(basis), {cert}});
  }
  if (sub.components.empty()) return Inconclusive{{"no locus of positive dimension"}};
  return sub;
}

std::string tag(const Verdict& v) {
  switch (v.index()) {
    case 0:
      return "FullCone";
    case 1:
      return "Subcone";
    default:
      return "Inconclusive";
  }
}

std::size_t vanishing_dim(const Verdict& v) {
  if (const auto* f = std::get_if<FullCone>(&v)) return f->dim;
  if (const auto* s = std::get_if<Subcone>(&v)) return s->max_dim();
  return 0;
}

bool contains(const Verdict& v, const QVector& c) {
  if (std::holds_alternative<FullCone>(v)) return true;
  if (const auto* s = std::get_if<Subcone>(&v))
    return std::any_of(s->components.begin(), s->components.end(),
                       [&](const SubconeComponent& comp) { return in_span(comp.basis, c); });
  return false;
}

namespace {

std::string brace_list(const std::vector<std::string>& items, const std::string& sep = ",") {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out + "}";
}

}  // namespace

std::string to_string(const Verdict& v) {
  if (const auto* f = std::get_if<FullCone>(&v))
    return "FullCone dim=" + std::to_string(f->dim) + " cert=" + brace_list(f->certificate);
  if (const auto* s = std::get_if<Subcone>(&v)) {
    std::string out = "Subcone";
    for (std::size_t k = 0; k < s->components.size(); ++k) {
      const auto& c = s->components[k];
      std::vector<std::string> vecs;
      for (const auto& b : c.basis) vecs.push_back(to_string(b));
      out += (k ? " | dim=" : " dim=") + std::to_string(c.dim()) + " cert=" + brace_list(c.certificate) +
             " basis=" + brace_list(vecs, ", ");
    }
    return out;
  }
  return "Inconclusive diag=" + brace_list(std::get<Inconclusive>(v).diagnostics, "; ");
}

}  // namespace futaki
