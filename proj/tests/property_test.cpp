#include <numeric>
#include <random>

#include "doctest.h"
#include "futaki/verify.hpp"
#include "support.hpp"

using namespace futaki;
using namespace futaki::test;

namespace {

Exponents random_exponents(std::mt19937_64& rng, const AmbientSpace& amb, const std::vector<int>& degree) {
  Exponents e(amb.coord_count(), 0);
  for (std::size_t f = 0; f < amb.factor_count(); ++f) {
    std::uniform_int_distribution<std::size_t> pick(0, amb.factor(f).coords.size() - 1);
    for (int k = 0; k < degree[f]; ++k) ++e[amb.offset(f) + pick(rng)];
  }
  return e;
}

MultiPoly random_poly(std::mt19937_64& rng, const RingPtr& r, const std::vector<int>& degree) {
  TermMap terms;
  std::uniform_int_distribution<int> count(1, 4);
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    const auto e = random_exponents(rng, r->ambient, degree);
    RatFunc c = random_rational(rng, 5, 3);
    if (r->params.has_parameter() && rng() % 2) c = c * RatFunc::parameter() + RatFunc(1);
    if (c.is_zero()) continue;
    terms[e] = terms.count(e) ? terms[e] + c : c;
    if (terms[e].is_zero()) terms.erase(e);
  }
  return MultiPoly::from_terms(r, std::move(terms));
}

MonomialAutomorphism random_automorphism(std::mt19937_64& rng, const RingPtr& r) {
  const auto& amb = r->ambient;
  std::vector<std::size_t> fsrc(amb.factor_count());
  std::iota(fsrc.begin(), fsrc.end(), 0);
  // Factors of equal dimension may be exchanged.
  if (amb.factor_count() == 2 && amb.factor(0).dimension() == amb.factor(1).dimension() && rng() % 2)
    std::swap(fsrc[0], fsrc[1]);
  std::vector<std::size_t> src(amb.coord_count());
  std::vector<RatFunc> scalars;
  for (std::size_t f = 0; f < amb.factor_count(); ++f) {
    const std::size_t from = fsrc[f];
    std::vector<std::size_t> block(amb.factor(from).coords.size());
    std::iota(block.begin(), block.end(), amb.offset(from));
    std::shuffle(block.begin(), block.end(), rng);
    for (std::size_t i = 0; i < block.size(); ++i) src[amb.offset(f) + i] = block[i];
  }
  for (std::size_t i = 0; i < amb.coord_count(); ++i) {
    Rational c = 0;
    while (is_zero(c)) c = random_rational(rng, 3, 2);
    scalars.emplace_back(c);
  }
  return MonomialAutomorphism(r, fsrc, src, scalars);
}

std::vector<std::vector<Integer>> random_unimodular(std::mt19937_64& rng, std::size_t d) {
  std::vector<std::vector<Integer>> u(d, std::vector<Integer>(d, Integer(0)));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, d - 1);
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      for (auto& x : u[i]) x = -x;
      continue;
    }
    const int k = coef(rng);
    for (std::size_t c = 0; c < d; ++c) u[i][c] += k * u[j][c];
  }
  return u;
}

QVector apply(const std::vector<std::vector<Integer>>& u, const QVector& v) {
  QVector out(v.size(), Rational(0));
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += Rational(u[r][c]) * v[c];
  return out;
}

std::vector<Polytope> corpus() {
  std::vector<Polytope> out;
  for (const auto& p : corpus_files()) out.push_back(parse_polytope(read_file(p)));
  for (const auto& fam : toric_families()) out.push_back(class_to_polytope(fam, fam.anticanonical));
  return out;
}

}  // namespace

TEST_SUITE("property") {
  TEST_CASE("pullback is a ring homomorphism") {
    std::mt19937_64 rng(0x5eed);
    const std::vector<RingPtr> rings = {ring("P2(x, y, z) x P2(u, v, w)"), ring("P1(a0, a1) x P3(b0, b1, b2, b3)"),
                                        ring("P4(x0, x1, x2, x3, x4)", "p", {0, 1})};
    int pairs = 0;
    for (int trial = 0; trial < 240; ++trial) {
      const auto& r = rings[trial % rings.size()];
      std::vector<int> deg(r->ambient.factor_count());
      for (auto& d : deg) d = 1 + static_cast<int>(rng() % 2);
      const auto f = random_poly(rng, r, deg);
      const auto g = random_poly(rng, r, deg);
      const auto a = random_automorphism(rng, r);
      const auto b = random_automorphism(rng, r);
      CHECK(pullback(f + g, a) == pullback(f, a) + pullback(g, a));
      CHECK(pullback(f * g, a) == pullback(f, a) * pullback(g, a));
      CHECK(pullback(pullback(f, a), b) == pullback(f, compose(a, b)));
      CHECK(pullback(pullback(f, a), a.inverse()) == f);
      CHECK(parse_poly(f.to_string(), r) == f);
      ++pairs;
    }
    CHECK(pairs >= 200);
  }

  TEST_CASE("catalog involutions square to the identity") {
    int involutions = 0;
    for (const auto& r : shipped_catalog().records) {
      if (r.kind != CaseKind::polynomial && r.kind != CaseKind::abstract) continue;
      const auto sys = build_constraints(r);
      for (std::size_t k = 0; k < r.finite.size(); ++k) {
        if (r.finite[k].order != 2) continue;
        const auto& s = sys.symmetries.at(k);
        CAPTURE(r.id);
        CAPTURE(s.name);
        CHECK(s.h11 * s.h11 == QMatrix::identity(s.h11.rows()));
        if (!s.adjoint) continue;
        CHECK(*s.adjoint * *s.adjoint == QMatrix::identity(s.adjoint->rows()));
        ++involutions;
      }
    }
    CHECK(involutions >= 20);
  }

  TEST_CASE("Futaki vector equivariance") {
    std::mt19937_64 rng(42);
    const auto polys = corpus();
    int transforms = 0;
    for (int trial = 0; trial < 90; ++trial) {
      const auto& p = polys[trial % polys.size()];
      const auto d = p.dimension();
      const auto f = futaki_vector(p);
      CAPTURE(to_text(p));
      const auto u = random_unimodular(rng, d);
      CHECK(futaki_vector(transform(p, u)) == apply(u, f));
      QVector t(d);
      for (auto& x : t) x = random_rational(rng, 5, 4);
      CHECK(futaki_vector(translate(p, t)) == f);
      const Rational k = make_rational(Integer(1 + rng() % 7), Integer(1 + rng() % 3));
      QVector kf = f;
      for (auto& x : kf) x *= k;
      CHECK(futaki_vector(scale(p, k)) == kf);
      ++transforms;
    }
    CHECK(transforms >= 50);
  }

  TEST_CASE("triangulation and divergence agree") {
    std::mt19937_64 rng(3);
    for (const auto& p : corpus()) {
      CAPTURE(to_text(p));
      CHECK(integrals_by_triangulation(p) == integrals_by_divergence(p));
      const auto moved = transform(p, random_unimodular(rng, p.dimension()));
      CHECK(integrals_by_triangulation(moved) == integrals_by_divergence(moved));
    }
  }

  TEST_CASE("Donaldson functional on products") {
    std::mt19937_64 rng(11);
    std::vector<Polytope> ones, twos;
    for (const auto& p : corpus()) {
      if (p.dimension() == 1) ones.push_back(p);
      if (p.dimension() == 2) twos.push_back(p);
    }
    ones.push_back(parse_polytope("1 <= 5/2\n-1 <= 1\n"));
    REQUIRE_FALSE(twos.empty());
    int pairs = 0;
    for (int trial = 0; trial < 30; ++trial) {
      Polytope p, q;
      switch (trial % 3) {
        case 0:
          p = ones[rng() % ones.size()];
          q = ones[rng() % ones.size()];
          break;
        case 1:
          p = ones[rng() % ones.size()];
          q = twos[rng() % twos.size()];
          break;
        default:
          p = twos[rng() % twos.size()];
          q = ones[rng() % ones.size()];
          break;
      }
      QVector fp(p.dimension()), fq(q.dimension());
      for (auto& x : fp) x = random_rational(rng, 4, 3);
      for (auto& x : fq) x = random_rational(rng, 4, 3);
      const Rational c = random_rational(rng, 4, 3);
      QVector both = fp;
      both.insert(both.end(), fq.begin(), fq.end());
      const auto pq = product(p, q);
      CHECK(donaldson_L(pq, both, c) == volume(q) * donaldson_L(p, fp) + volume(p) * donaldson_L(q, fq));
      CHECK(volume(pq) == volume(p) * volume(q));
      ++pairs;
    }
    CHECK(pairs >= 20);
  }
}
