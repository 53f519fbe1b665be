#include <cmath>
#include <numeric>

#include "doctest.h"
#include "support.hpp"

using namespace futaki;
using namespace futaki::test;

namespace {

struct PolygonOracle {
  Rational area;
  QVector moment;
  Rational boundary;
  QVector boundary_moment;
};

/// Shoelace integrals over the vertices in counterclockwise order, with
/// lattice edge lengths from the gcd rule.
PolygonOracle shoelace(std::vector<QVector> v) {
  double cx = 0, cy = 0;
  for (const auto& p : v) {
    cx += p[0].get_d();
    cy += p[1].get_d();
  }
  cx /= static_cast<double>(v.size());
  cy /= static_cast<double>(v.size());
  std::sort(v.begin(), v.end(), [&](const QVector& a, const QVector& b) {
    return std::atan2(a[1].get_d() - cy, a[0].get_d() - cx) < std::atan2(b[1].get_d() - cy, b[0].get_d() - cx);
  });
  PolygonOracle o{0, {0, 0}, 0, {0, 0}};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    const Rational cr = p[0] * q[1] - q[0] * p[1];
    o.area += cr / 2;
    o.moment[0] += (p[0] + q[0]) * cr / 6;
    o.moment[1] += (p[1] + q[1]) * cr / 6;
    const Rational dx = q[0] - p[0], dy = q[1] - p[1];
    const Integer den = lcm(Integer(dx.get_den()), Integer(dy.get_den()));
    const Integer ix = Integer(dx * den), iy = Integer(dy * den);
    const Integer g = gcd(ix, iy);
    const Rational len = Rational(g) / den;
    o.boundary += len;
    o.boundary_moment[0] += len * (p[0] + q[0]) / 2;
    o.boundary_moment[1] += len * (p[1] + q[1]) / 2;
  }
  return o;
}

Polytope s6(const Rational& a, const Rational& b, const Rational& c) {
  return class_to_polytope(toric_family("s6"), qv({3, a, b, c}));
}

}  // namespace

TEST_SUITE("toric") {
  TEST_CASE("vertices") {
    const auto tri = vertices_from_halfspaces(corpus_polytope("p2").halfspaces());
    CHECK(tri == std::vector<QVector>{qv({0, 0}), qv({0, 3}), qv({3, 0})});
    const auto hex = s6(1, 1, 1).vertices();
    CHECK(hex == std::vector<QVector>{qv({0, 1}), qv({0, 2}), qv({1, 0}), qv({1, 2}), qv({2, 0}), qv({2, 1})});
    CHECK_THROWS_AS(Polytope::from_halfspaces({{{Integer(1)}, 0}, {{Integer(-1)}, -1}}), GeometryError);
    CHECK_THROWS_AS(Polytope::from_halfspaces({{{Integer(1), Integer(0)}, 1}, {{Integer(0), Integer(1)}, 1}}),
                    GeometryError);
  }

  TEST_CASE("volumes and moments") {
    const auto sq = corpus_polytope("square");
    CHECK(volume(sq) == 1);
    CHECK(moment(sq) == qv({Rational(1, 2), Rational(1, 2)}));
    const auto tri = corpus_polytope("p2");
    CHECK(volume(tri) == Rational(9, 2));
    CHECK(moment(tri) == qv({Rational(9, 2), Rational(9, 2)}));
    CHECK(volume(s6(1, 1, 1)) == 3);
    CHECK(volume(corpus_polytope("cube")) == 1);
    CHECK(volume(corpus_polytope("simplex3")) == Rational(32, 3));
    CHECK(volume(corpus_polytope("interval")) == 3);
  }

  TEST_CASE("boundary measures") {
    const auto sq = boundary_integral(corpus_polytope("square"));
    CHECK(sq.mass == 4);
    CHECK(sq.moment == qv({2, 2}));
    const auto tri = boundary_integral(corpus_polytope("p2"));
    CHECK(tri.mass == 9);
    CHECK(tri.moment == qv({9, 9}));
    CHECK(boundary_integral(corpus_polytope("wedge")).mass == 2 + 4 + 2);
    CHECK(boundary_integral(corpus_polytope("interval")).mass == 2);
  }

  TEST_CASE("Donaldson functional") {
    for (const auto& path : corpus_files()) {
      const auto p = parse_polytope(read_file(path));
      CAPTURE(path.filename().string());
      CHECK(donaldson_L(p, QVector(p.dimension(), Rational(0)), 1) == 0);
    }
    CHECK(donaldson_L(corpus_polytope("p2"), qv({1, 0})) == 0);
    CHECK(donaldson_L(s6(1, 1, Rational(1, 2)), qv({1, 0})) != 0);
    CHECK_THROWS_AS(donaldson_L(corpus_polytope("p2"), qv({1})), DomainError);
  }

  TEST_CASE("Futaki vectors") {
    CHECK(futaki_vector(corpus_polytope("cube")) == qv({0, 0, 0}));
    CHECK(futaki_vector(corpus_polytope("p2")) == qv({0, 0}));
    CHECK(is_zero_vector(futaki_vector(s6(Rational(1, 2), 1, Rational(3, 2)))));
    CHECK_FALSE(is_zero_vector(futaki_vector(s6(1, 1, Rational(1, 2)))));
    CHECK_FALSE(is_zero_vector(futaki_vector(corpus_polytope("hirzebruch1"))));
  }

  TEST_CASE("family builders") {
    const auto hex = s6(1, 1, 1);
    CHECK(hex.halfspaces().size() == 6);
    CHECK(class_to_polytope(toric_family("p2"), qv({3})).vertices() == corpus_polytope("p2").vertices());
    CHECK(class_to_polytope(toric_family("bl2lines"), qv({4, 1, 2})).vertices() ==
          corpus_polytope("two_lines").vertices());
    CHECK_THROWS_AS(s6(2, 1, 1), OutOfRegion);
    CHECK_THROWS_AS(s6(0, 1, 1), OutOfRegion);
    CHECK_THROWS_AS(class_to_polytope(toric_family("bl2lines"), qv({4, 2, 2})), OutOfRegion);
    CHECK_THROWS_AS(class_to_polytope(toric_family("s6"), qv({1})), DomainError);
    CHECK_THROWS_AS(toric_family("dp7"), DomainError);
    for (const auto& fam : toric_families()) {
      CAPTURE(fam.id);
      CHECK(is_zero_vector(futaki_vector(class_to_polytope(fam, fam.anticanonical))));
    }
  }

  TEST_CASE("polytope text") {
    const auto p = corpus_polytope("trapezoid");
    CHECK(parse_polytope(to_text(p)).vertices() == p.vertices());
    CHECK_THROWS_AS(parse_polytope("1 0 <="), ParseError);
    CHECK_THROWS_AS(parse_polytope("1 x <= 2"), ParseError);
    CHECK_THROWS_AS(parse_polytope("1 0 <= 1/0"), ParseError);
    const auto scaled = parse_polytope("2 0 <= 2\n-1 0 <= 0\n0 1 <= 1\n0 -1 <= 0\n");
    CHECK(scaled.halfspaces()[0].normal == std::vector<Integer>{1, 0});
    CHECK(scaled.halfspaces()[0].offset == 1);
  }

  TEST_CASE("polygon integrals match the shoelace formula") {
    for (const auto& path : corpus_files()) {
      const auto p = parse_polytope(read_file(path));
      if (p.dimension() != 2) continue;
      CAPTURE(path.filename().string());
      const auto o = shoelace(p.vertices());
      const auto in = integrals_by_triangulation(p);
      CHECK(in.volume == o.area);
      CHECK(in.moment == o.moment);
      CHECK(in.sigma_mass == o.boundary);
      CHECK(in.sigma_moment == o.boundary_moment);
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 40; ++k) {
      const Rational a = make_rational(1 + rng() % 11, 4), b = make_rational(1 + rng() % 11, 4);
      const Rational c = make_rational(1 + rng() % 11, 4);
      Polytope hex;
      try {
        hex = s6(a, b, c);
      } catch (const OutOfRegion&) {
        continue;
      }
      const auto o = shoelace(hex.vertices());
      const auto in = integrals_by_triangulation(hex);
      CHECK(in.volume == o.area);
      CHECK(in.moment == o.moment);
      CHECK(in.sigma_mass == o.boundary);
      CHECK(in.sigma_moment == o.boundary_moment);
    }
  }

  TEST_CASE("two-line blow-up zero set") {
    // Zero exactly on a = b and on the parabola (a - b)^2 = 8(a + b - 2).
    const auto& fam = toric_family("bl2lines");
    for (int i = 1; i < 32; ++i)
      for (int j = 1; i + j < 32; ++j) {
        const Rational a(i, 8), b(j, 8);
        const bool predicted = a == b || (a - b) * (a - b) == 8 * (a + b - 2);
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CHECK(is_zero_vector(futaki_vector(class_to_polytope(fam, qv({4, a, b})))) == predicted);
      }
    CHECK(is_zero_vector(futaki_vector(class_to_polytope(fam, qv({4, Rational(25, 16), Rational(9, 16)})))));
    CHECK_FALSE(is_zero_vector(futaki_vector(class_to_polytope(fam, qv({4, 2, 1})))));
  }

  TEST_CASE("zero-locus scans") {
    const auto& hex = toric_family("s6");
    const auto loci = std::vector<LocusCandidate>{
        {"(a + b + c - h)", parse_linear_forms(hex, {"a + b + c - h"})},
        {"(a - b, b - c)", parse_linear_forms(hex, {"a - b", "b - c"})}};
    const auto scan = zero_locus_scan(hex, Rational(1, 4), loci, 4);
    CHECK_FALSE(scan.identically_zero);
    CHECK(scan.zero_set_equals_union);
    CHECK(scan.zeros_off_loci == 0);
    CHECK(scan.nonzero_on_loci == 0);
    CHECK(scan.zeros > 0);
    CHECK(scan.free_params == std::vector<std::string>{"a", "b", "c"});
    CHECK(format_scan(scan) == format_scan(zero_locus_scan(hex, Rational(1, 4), loci, 1)));

    const auto box = zero_locus_scan(toric_family("p1xp1"), Rational(1, 2), {}, 2);
    CHECK(box.identically_zero);
    CHECK(box.zeros == box.points.size());

    const auto& lines = toric_family("bl2lines");
    const auto diag = zero_locus_scan(lines, Rational(1, 4), {{"(a - b)", parse_linear_forms(lines, {"a - b"})}}, 2);
    CHECK_FALSE(diag.identically_zero);
    CHECK(diag.zeros == 9);
    CHECK(diag.zeros_off_loci == 2);
    CHECK(diag.nonzero_on_loci == 0);
    CHECK_THROWS(parse_linear_forms(hex, {"a + q"}));
  }
}
