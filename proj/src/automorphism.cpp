#include "futaki/automorphism.hpp"

#include <algorithm>
#include <numeric>

namespace futaki {

namespace {

bool is_permutation_of_range(const std::vector<std::size_t>& v) {
  std::vector<bool> seen(v.size(), false);
  for (auto x : v) {
    if (x >= v.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

MonomialAutomorphism::MonomialAutomorphism(RingPtr ring, std::vector<std::size_t> factor_source,
                                           std::vector<std::size_t> source, std::vector<RatFunc> scalars)
    : ring_(std::move(ring)),
      factor_source_(std::move(factor_source)),
      source_(std::move(source)),
      scalars_(std::move(scalars)) {
  const auto& amb = ring_->ambient;
  if (factor_source_.size() != amb.factor_count() || !is_permutation_of_range(factor_source_))
    throw DomainError("factor map is not a permutation of the factors");
  if (source_.size() != amb.coord_count() || !is_permutation_of_range(source_))
    throw DomainError("coordinate map is not a permutation");
  if (scalars_.size() != amb.coord_count()) throw DomainError("wrong number of scalars");
  for (std::size_t f = 0; f < amb.factor_count(); ++f)
    if (amb.factor(f).coords.size() != amb.factor(factor_source_[f]).coords.size())
      throw DomainError("factor map joins factors of different dimension");
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if (amb.factor_of(source_[i]) != factor_source_[amb.factor_of(i)])
      throw DomainError("coordinate " + amb.coord_name(i) + " is not fed by its factor's source");
    if (scalars_[i].is_zero()) throw DomainError("zero scalar in automorphism");
  }
}

MonomialAutomorphism MonomialAutomorphism::identity(const RingPtr& ring) {
  const auto n = ring->ambient.coord_count();
  return MonomialAutomorphism(ring, iota_vec(ring->ambient.factor_count()), iota_vec(n),
                              std::vector<RatFunc>(n, RatFunc(1)));
}

MonomialAutomorphism MonomialAutomorphism::from_images(const RingPtr& ring, const std::vector<MultiPoly>& images,
                                                       std::vector<std::size_t> factor_source) {
  const auto& amb = ring->ambient;
  if (images.size() != amb.coord_count())
    throw DomainError("expected " + std::to_string(amb.coord_count()) + " coordinate images, got " +
                      std::to_string(images.size()));
  std::vector<std::size_t> source;
  std::vector<RatFunc> scalars;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& img = images[i];
    require_same_ambient(img.ambient(), amb, "automorphism image");
    if (img.term_count() != 1) throw DomainError("image of " + amb.coord_name(i) + " is not a scaled coordinate");
    const auto& [e, c] = *img.terms().begin();
    std::size_t j = e.size();
    int total = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      total += e[k];
      if (e[k] == 1) j = k;
    }
    if (total != 1 || j == e.size())
      throw DomainError("image of " + amb.coord_name(i) + " is not a scaled coordinate");
    source.push_back(j);
    scalars.push_back(c);
  }
  if (factor_source.empty()) {
    for (std::size_t f = 0; f < amb.factor_count(); ++f) factor_source.push_back(amb.factor_of(source[amb.offset(f)]));
  }
  return MonomialAutomorphism(ring, std::move(factor_source), std::move(source), std::move(scalars));
}

MonomialAutomorphism MonomialAutomorphism::with_scalars(std::vector<RatFunc> scalars) const {
  return MonomialAutomorphism(ring_, factor_source_, source_, std::move(scalars));
}

std::vector<MultiPoly> MonomialAutomorphism::images() const {
  std::vector<MultiPoly> out;
  out.reserve(source_.size());
  for (std::size_t i = 0; i < source_.size(); ++i)
    out.push_back(scalars_[i] * MultiPoly::variable(ring_, source_[i]));
  return out;
}

bool MonomialAutomorphism::is_projective_identity() const {
  const auto& amb = ambient();
  for (std::size_t f = 0; f < factor_source_.size(); ++f)
    if (factor_source_[f] != f) return false;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if (source_[i] != i) return false;
    if (!(scalars_[i] == scalars_[amb.offset(amb.factor_of(i))])) return false;
  }
  return true;
}

MonomialAutomorphism MonomialAutomorphism::power(unsigned k) const {
  MonomialAutomorphism out = identity(ring_);
  for (unsigned i = 0; i < k; ++i) out = compose(out, *this);
  return out;
}

MonomialAutomorphism MonomialAutomorphism::inverse() const {
  const auto n = source_.size();
  std::vector<std::size_t> src(n);
  std::vector<RatFunc> sc(n);
  for (std::size_t i = 0; i < n; ++i) {
    src[source_[i]] = i;
    sc[source_[i]] = RatFunc(1) / scalars_[i];
  }
  std::vector<std::size_t> fsrc(factor_source_.size());
  for (std::size_t f = 0; f < factor_source_.size(); ++f) fsrc[factor_source_[f]] = f;
  return MonomialAutomorphism(ring_, std::move(fsrc), std::move(src), std::move(sc));
}

std::string MonomialAutomorphism::to_string() const {
  std::string out = "map(";
  const auto imgs = images();
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    if (i) out += ", ";
    out += imgs[i].to_string();
  }
  out += ")";
  if (factor_source_ != iota_vec(factor_source_.size())) {
    out += " factors = (";
    for (std::size_t f = 0; f < factor_source_.size(); ++f) {
      if (f) out += ", ";
      out += std::to_string(factor_source_[f]);
    }
    out += ")";
  }
  return out;
}

bool operator==(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
  return a.ambient() == b.ambient() && a.factor_source_ == b.factor_source_ && a.source_ == b.source_ &&
         a.scalars_ == b.scalars_;
}

MonomialAutomorphism compose(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
  require_same_ambient(a.ambient(), b.ambient(), "compose automorphisms");
  const auto n = a.sources().size();
  std::vector<std::size_t> src(n);
  std::vector<RatFunc> sc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = a.source(i);
    src[i] = b.source(j);
    sc[i] = a.scalar(i) * b.scalar(j);
  }
  std::vector<std::size_t> fsrc(a.factor_sources().size());
  for (std::size_t f = 0; f < fsrc.size(); ++f) fsrc[f] = b.factor_source(a.factor_source(f));
  return MonomialAutomorphism(a.ring(), std::move(fsrc), std::move(src), std::move(sc));
}

bool projectively_equal(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
  if (!(a.ambient() == b.ambient())) return false;
  if (a.sources() != b.sources() || a.factor_sources() != b.factor_sources()) return false;
  const auto& amb = a.ambient();
  for (std::size_t i = 0; i < a.sources().size(); ++i) {
    const auto j = amb.offset(amb.factor_of(i));
    if (!(a.scalar(i) * b.scalar(j) == a.scalar(j) * b.scalar(i))) return false;
  }
  return true;
}

}  // namespace futaki
