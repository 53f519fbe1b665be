#include "doctest.h"
#include "support.hpp"

using namespace futaki;
using namespace futaki::test;

TEST_SUITE("polyring") {
  TEST_CASE("univariate arithmetic and roots") {
    const UPoly p = UPoly::indeterminate();
    const UPoly f = (p - UPoly(1)) * (p + UPoly(2)) * (p * UPoly(3) - UPoly(1));
    CHECK(f.degree() == 3);
    CHECK(f.rational_roots() == std::vector<Rational>{-2, Rational(1, 3), 1});
    const auto [quot, rem] = UPoly::divmod(f, p - UPoly(1));
    CHECK(rem.is_zero());
    CHECK(quot.degree() == 2);
    CHECK(UPoly::gcd(f, (p - UPoly(1)) * (p - UPoly(5))) == p - UPoly(1));
    CHECK(f.strip_roots({1, -2}).degree() == 1);
    CHECK(f.strip_roots({1, -2, Rational(1, 3)}).is_constant());
    CHECK_THROWS_AS(UPoly::divmod(f, UPoly()), DomainError);
    CHECK((p * p - UPoly(2)).rational_roots().empty());
    CHECK((p * p - UPoly(1)).to_string("t") == "t^2 - 1");
  }

  TEST_CASE("rational functions are normalized") {
    const RatFunc p = RatFunc::parameter();
    const RatFunc f = (p * p - RatFunc(1)) / (p - RatFunc(1));
    CHECK(f == p + RatFunc(1));
    CHECK(f.den() == UPoly(1));
    const RatFunc g = RatFunc(2) / (RatFunc(2) * p + RatFunc(2));
    CHECK(g.den().leading() == 1);
    CHECK(g.evaluate(1) == Rational(1, 2));
    CHECK_THROWS_AS(g.evaluate(-1), DomainError);
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), DomainError);
    CHECK(RatFunc(Rational(3, 4)).constant_value() == Rational(3, 4));
    CHECK_THROWS_AS(p.constant_value(), DomainError);
    CHECK((p / (p + RatFunc(1))).to_string("s") == "(s)/(s + 1)");
  }

  TEST_CASE("ambient spaces") {
    const auto amb = parse_ambient("P2(x, y, z) x P1(u, v)");
    CHECK(amb.factor_count() == 2);
    CHECK(amb.coord_count() == 5);
    CHECK(amb.factor_of(3) == 1);
    CHECK(amb.index_of("v") == 4);
    CHECK_FALSE(amb.index_of("w"));
    CHECK(amb.to_string() == "P2(x, y, z) x P1(u, v)");
    CHECK_THROWS(parse_ambient("P2(x, y)"));
    CHECK_THROWS(parse_ambient("P1(x, y) x P1(x, z)"));
    CHECK_THROWS(parse_ambient("P0(x)"));
  }

  TEST_CASE("parsing the 3.10 quadric") {
    const auto r = ring("P4(x, y, z, t, w)", "a", {-1, 0, 1});
    const auto q = parse_poly("w^2 + x*y + z*t + a*(x*t + y*z)", r);
    CHECK(q.term_count() == 5);
    CHECK(q.multidegree() == std::vector<int>{2});
    CHECK(parse_poly(q.to_string(), r) == q);
  }

  TEST_CASE("parse errors") {
    const auto r = ring("P3(x0, x1, x2, x3)");
    const auto x0 = parse_poly("x0", r);
    CHECK(x0.term_count() == 1);
    CHECK(multidegree(x0) == std::vector<int>{1});
    CHECK_THROWS_AS(parse_poly("x0 + x0^2", r), InhomogeneousError);
    CHECK_THROWS_AS(parse_poly("x0 + q", r), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 / x1", r), ParseError);
    CHECK_THROWS_AS(parse_poly("(x0 + x1", r), ParseError);
    try {
      parse_poly("x0 + x9", r);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 6);
    }
  }

  TEST_CASE("multidegrees") {
    const auto r = ring("P2(x, y, z) x P2(u, v, w)");
    CHECK(multidegree(parse_poly("x*u^2 + y*v^2 + z*w^2", r)) == std::vector<int>{1, 2});
    CHECK(multidegree(parse_poly("1", r)) == std::vector<int>{0, 0});
    const auto r3 = ring("P1(x0, x1) x P1(y0, y1) x P1(z0, z1)");
    CHECK(multidegree(parse_poly("x0*y1 - x1*y0", r3)) == std::vector<int>{1, 1, 0});
  }

  TEST_CASE("canonical order is descending lexicographic") {
    const auto r = ring("P2(x, y, z)");
    CHECK(parse_poly("z^2 + x*y + y^2 + x^2", r).to_string() == "x^2 + x*y + y^2 + z^2");
    CHECK(parse_poly("(x - y)*(x + y)", r).to_string() == "x^2 - y^2");
    CHECK(parse_poly("x - x", r).is_zero());
  }

  TEST_CASE("pullbacks") {
    const auto r = ring("P2(x, y, z) x P2(u, v, w)");
    const auto f = parse_poly("x*u^2 + y*v^2 + z*w^2", r);
    CHECK(pullback(f, map_of(r, {"z", "y", "x", "w", "v", "u"})) == f);
    CHECK(pullback(f, MonomialAutomorphism::identity(r)) == f);
    CHECK(pullback(f, map_of(r, {"2*x", "y", "z", "u", "v", "w"})) == parse_poly("2*x*u^2 + y*v^2 + z*w^2", r));
  }

  TEST_CASE("3.13 pullback lies in the equation span") {
    const auto* rec = shipped_catalog().find("3.13");
    REQUIRE(rec);
    const auto& tau_xz = *rec->finite.at(0).map;
    const auto pulled = pullback(rec->equations[0], tau_xz);
    CHECK(pulled == rec->equations[1]);
    const auto span = in_span(pulled, rec->equations);
    REQUIRE(span.coefficients);
    CHECK(*span.coefficients == std::vector<RatFunc>{0, 1, 0});
  }

  TEST_CASE("span membership") {
    const auto r = ring("P3(x0, x1, x2, x3)");
    CHECK_FALSE(in_span(parse_poly("x0", r), {parse_poly("x1", r)}).coefficients);
    const auto ra = ring("P4(x, y, z, t, w)", "a", {-1, 0, 1});
    const auto q = parse_poly("w^2 + x*y + z*t + a*(x*t + y*z)", ra);
    const auto s = in_span(pullback(q, map_of(ra, {"y", "x", "t", "z", "w"})), {q});
    REQUIRE(s.coefficients);
    CHECK(*s.coefficients == std::vector<RatFunc>{1});
  }

  TEST_CASE("span solves record where pivots vanish") {
    const auto r = ring("P1(x, y)", "p");
    const auto g = parse_poly("(p - 2)*x", r);
    const auto s = in_span(parse_poly("x", r), {g});
    REQUIRE(s.coefficients);
    CHECK(s.singular_values == std::vector<Rational>{2});
  }

  TEST_CASE("specialization") {
    const auto r = ring("P4(x, y, z, t, w)", "a", {-1, 0, 1});
    const auto q = parse_poly("w^2 + x*y + z*t + a*(x*t + y*z)", r);
    const auto r2 = make_ring(r->ambient);
    CHECK(q.specialize(2, r2) == parse_poly("w^2 + x*y + z*t + 2*x*t + 2*y*z", r2));
  }
}
