#include "futaki/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "futaki/poly.hpp"

namespace futaki {

namespace {

Rational dot(const std::vector<Integer>& u, const QVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * x[i];
  return s;
}

QVector sub(const QVector& a, const QVector& b) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector cross(const QVector& a, const QVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det2(const QVector& a, const QVector& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational det3(const QVector& a, const QVector& b, const QVector& c) {
  const QVector x = cross(b, c);
  return a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
}

QMatrix normal_matrix(const std::vector<Halfspace>& hs, const std::vector<std::size_t>& rows, std::size_t d) {
  QMatrix m(rows.size(), d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = hs[rows[r]].normal[c];
  return m;
}

bool feasible(const std::vector<Halfspace>& hs, const QVector& x) {
  return std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return dot(h.normal, x) <= h.offset; });
}

// Calls fn on every k-subset of {0..n-1}.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t dimension_of(const std::vector<Halfspace>& hs) {
  if (hs.empty()) throw GeometryError("no halfspaces");
  const std::size_t d = hs.front().normal.size();
  if (d < 1 || d > 3) throw GeometryError("polytope dimension must be 1, 2 or 3");
  for (const auto& h : hs)
    if (h.normal.size() != d) throw GeometryError("halfspace normals of different lengths");
  return d;
}

void check_bounded(const std::vector<Halfspace>& hs, std::size_t d) {
  std::vector<std::size_t> all(hs.size());
  std::iota(all.begin(), all.end(), 0);
  if (rank(normal_matrix(hs, all, d)) < d) throw GeometryError("polytope is unbounded");
  // The recession cone {Ux <= 0} is pointed; it is nonzero iff it has an
  // extreme ray, which spans the kernel of d-1 of the rows.
  bool unbounded = false;
  for_each_subset(hs.size(), d - 1, [&](const std::vector<std::size_t>& rows) {
    if (unbounded) return;
    std::vector<QVector> ker;
    if (d == 1) {
      ker = {QVector{Rational(1)}};
    } else {
      ker = kernel_basis(normal_matrix(hs, rows, d));
    }
    if (ker.size() != 1) return;
    for (const int sign : {1, -1}) {
      bool ray = true;
      for (const auto& h : hs) {
        Rational s = 0;
        for (std::size_t i = 0; i < d; ++i) s += h.normal[i] * ker[0][i];
        if (sign * s > 0) {
          ray = false;
          break;
        }
      }
      if (ray) unbounded = true;
    }
  });
  if (unbounded) throw GeometryError("polytope is unbounded");
}

std::size_t affine_rank(const std::vector<QVector>& pts) {
  if (pts.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
  if (rows.empty()) return 0;
  return rank(QMatrix::from_rows(rows));
}

// Cyclic order of coplanar points around their centroid, turning
// counterclockwise when viewed from the tip of `normal`.
std::vector<std::size_t> cyclic_order(const std::vector<QVector>& pts, const std::vector<std::size_t>& idx,
                                      const std::vector<Integer>& normal) {
  QVector center(3, Rational(0));
  for (auto i : idx)
    for (std::size_t k = 0; k < 3; ++k) center[k] += pts[i][k];
  for (auto& c : center) c /= static_cast<long>(idx.size());
  const QVector n = {Rational(normal[0]), Rational(normal[1]), Rational(normal[2])};
  const QVector ref = sub(pts[idx[0]], center);
  auto orient = [&](const QVector& a, const QVector& b) -> Rational {
    const QVector c = cross(a, b);
    return c[0] * n[0] + c[1] * n[1] + c[2] * n[2];
  };
  auto half = [&](const QVector& w) {
    const Rational o = orient(ref, w);
    if (o > 0) return 0;
    if (o == 0) {
      const Rational dp = ref[0] * w[0] + ref[1] * w[1] + ref[2] * w[2];
      return dp > 0 ? 0 : 1;
    }
    return 1;
  };
  std::vector<std::size_t> out = idx;
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    const QVector wa = sub(pts[a], center);
    const QVector wb = sub(pts[b], center);
    const int ha = half(wa), hb = half(wb);
    if (ha != hb) return ha < hb;
    return orient(wa, wb) > 0;
  });
  return out;
}

}  // namespace

std::vector<QVector> vertices_from_halfspaces(const std::vector<Halfspace>& hs) {
  const std::size_t d = dimension_of(hs);
  std::set<QVector> found;
  for_each_subset(hs.size(), d, [&](const std::vector<std::size_t>& rows) {
    const QMatrix a = normal_matrix(hs, rows, d);
    if (rank(a) < d) return;
    QVector b;
    for (auto r : rows) b.push_back(hs[r].offset);
    const auto x = solve<Rational>(a, std::span<const Rational>(b));
    if (x && feasible(hs, *x)) found.insert(*x);
  });
  return {found.begin(), found.end()};
}

Polytope Polytope::from_halfspaces(std::vector<Halfspace> halfspaces) {
  const std::size_t d = dimension_of(halfspaces);
  for (auto& h : halfspaces) {
    Integer g = 0;
    for (const auto& x : h.normal) g = gcd(g, x);
    if (g == 0) throw GeometryError("zero normal vector");
    for (auto& x : h.normal) x /= g;
    h.offset /= Rational(g);
  }
  check_bounded(halfspaces, d);
  Polytope p;
  p.dim_ = d;
  p.vertices_ = vertices_from_halfspaces(halfspaces);
  if (p.vertices_.empty()) throw GeometryError("polytope is empty");
  if (affine_rank(p.vertices_) < d) throw GeometryError("polytope is not full-dimensional");
  for (std::size_t k = 0; k < halfspaces.size(); ++k) {
    std::vector<std::size_t> on;
    std::vector<QVector> pts;
    for (std::size_t v = 0; v < p.vertices_.size(); ++v)
      if (dot(halfspaces[k].normal, p.vertices_[v]) == halfspaces[k].offset) {
        on.push_back(v);
        pts.push_back(p.vertices_[v]);
      }
    if (on.size() < d || affine_rank(pts) != d - 1)
      throw GeometryError("halfspace " + std::to_string(k + 1) + " does not support a facet");
    if (d == 3) on = cyclic_order(p.vertices_, on, halfspaces[k].normal);
    if (d == 2 && on.size() > 2) {
      // keep the two extreme points of the edge
      const QVector dir = {Rational(-halfspaces[k].normal[1]), Rational(halfspaces[k].normal[0])};
      auto key = [&](std::size_t v) -> Rational { return dir[0] * p.vertices_[v][0] + dir[1] * p.vertices_[v][1]; };
      const auto [lo, hi] = std::minmax_element(on.begin(), on.end(),
                                                [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
      on = {*lo, *hi};
    }
    p.facets_.push_back(std::move(on));
  }
  for (std::size_t a = 0; a < halfspaces.size(); ++a)
    for (std::size_t b = a + 1; b < halfspaces.size(); ++b)
      if (halfspaces[a].normal == halfspaces[b].normal)
        throw GeometryError("halfspaces " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " are parallel");
  p.halfspaces_ = std::move(halfspaces);
  return p;
}

Integrals integrals_by_triangulation(const Polytope& p) {
  const std::size_t d = p.dimension();
  const auto& vs = p.vertices();
  Integrals out{0, QVector(d, Rational(0)), 0, QVector(d, Rational(0))};
  if (d == 1) {
    const QVector& a = vs.front();
    const QVector& b = vs.back();
    out.volume = b[0] - a[0];
    out.moment[0] = (b[0] * b[0] - a[0] * a[0]) / 2;
    out.sigma_mass = 2;
    out.sigma_moment[0] = a[0] + b[0];
    return out;
  }
  const QVector& c0 = vs.front();
  for (std::size_t k = 0; k < p.halfspaces().size(); ++k) {
    const auto& u = p.halfspaces()[k].normal;
    const auto& f = p.facet_vertices()[k];
    if (d == 2) {
      const QVector& a = vs[f[0]];
      const QVector& b = vs[f[1]];
      // b - a = t·(-u2, u1) with the primitive edge direction
      const QVector e = sub(b, a);
      const Rational t = u[1] != 0 ? e[0] / Rational(-u[1]) : e[1] / Rational(u[0]);
      const Rational len = abs(t);
      out.sigma_mass += len;
      for (std::size_t i = 0; i < 2; ++i) out.sigma_moment[i] += len * (a[i] + b[i]) / 2;
      const Rational v = abs(det2(sub(a, c0), sub(b, c0))) / 2;
      out.volume += v;
      for (std::size_t i = 0; i < 2; ++i) out.moment[i] += v * (c0[i] + a[i] + b[i]) / 3;
    } else {
      const QVector& a = vs[f[0]];
      for (std::size_t j = 1; j + 1 < f.size(); ++j) {
        const QVector& b = vs[f[j]];
        const QVector& c = vs[f[j + 1]];
        const QVector x = cross(sub(b, a), sub(c, a));
        std::size_t nz = 0;
        while (u[nz] == 0) ++nz;
        const Rational area = abs(x[nz] / Rational(u[nz])) / 2;
        out.sigma_mass += area;
        for (std::size_t i = 0; i < 3; ++i) out.sigma_moment[i] += area * (a[i] + b[i] + c[i]) / 3;
        const Rational v = abs(det3(sub(a, c0), sub(b, c0), sub(c, c0))) / 6;
        out.volume += v;
        for (std::size_t i = 0; i < 3; ++i) out.moment[i] += v * (c0[i] + a[i] + b[i] + c[i]) / 4;
      }
    }
  }
  return out;
}

namespace {

// σ-mass and ∫ x dσ of one facet, computed from its projection onto the
// coordinate hyperplane x_k = 0 for some k with u_k ≠ 0.
std::pair<Rational, QVector> facet_by_projection(const Polytope& p, std::size_t k) {
  const std::size_t d = p.dimension();
  const auto& h = p.halfspaces()[k];
  const auto& u = h.normal;
  const auto& f = p.facet_vertices()[k];
  const auto& vs = p.vertices();
  std::size_t drop = 0;
  while (u[drop] == 0) ++drop;
  const Rational ud = abs(Rational(u[drop]));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d; ++i)
    if (i != drop) keep.push_back(i);

  // Projected measure A and projected first moments M[j] (j over `keep`).
  Rational area = 0;
  std::vector<Rational> proj_moment(keep.size(), Rational(0));
  if (d == 2) {
    const Rational y0 = vs[f[0]][keep[0]];
    const Rational y1 = vs[f[1]][keep[0]];
    area = abs(y1 - y0);
    proj_moment[0] = area * (y0 + y1) / 2;
  } else {
    Rational signed_area = 0;
    Rational mx = 0, my = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const QVector& a = vs[f[j]];
      const QVector& b = vs[f[(j + 1) % f.size()]];
      const Rational xa = a[keep[0]], ya = a[keep[1]], xb = b[keep[0]], yb = b[keep[1]];
      const Rational cr = xa * yb - xb * ya;
      signed_area += cr;
      mx += (xa + xb) * cr;
      my += (ya + yb) * cr;
    }
    signed_area /= 2;
    mx /= 6;
    my /= 6;
    if (signed_area < 0) {
      signed_area = -signed_area;
      mx = -mx;
      my = -my;
    }
    area = signed_area;
    proj_moment = {mx, my};
  }
  QVector m(d, Rational(0));
  Rational rest = h.offset * area;
  for (std::size_t j = 0; j < keep.size(); ++j) {
    m[keep[j]] = proj_moment[j] / ud;
    rest -= u[keep[j]] * proj_moment[j];
  }
  m[drop] = rest / Rational(u[drop]) / ud;
  return {area / ud, m};
}

}  // namespace

Integrals integrals_by_divergence(const Polytope& p) {
  const std::size_t d = p.dimension();
  Integrals out{0, QVector(d, Rational(0)), 0, QVector(d, Rational(0))};
  if (d == 1) {
    for (const auto& h : p.halfspaces()) {
      const Rational x = h.offset / Rational(h.normal[0]);
      out.sigma_mass += 1;
      out.sigma_moment[0] += x;
      out.volume += h.offset;
      out.moment[0] += h.offset * x / 2;
    }
    return out;
  }
  for (std::size_t k = 0; k < p.halfspaces().size(); ++k) {
    const auto [mass, mom] = facet_by_projection(p, k);
    const Rational& c = p.halfspaces()[k].offset;
    out.sigma_mass += mass;
    out.volume += c * mass;
    for (std::size_t i = 0; i < d; ++i) {
      out.sigma_moment[i] += mom[i];
      out.moment[i] += c * mom[i];
    }
  }
  out.volume /= static_cast<long>(d);
  for (auto& x : out.moment) x /= static_cast<long>(d + 1);
  return out;
}

Rational volume(const Polytope& p) { return integrals_by_triangulation(p).volume; }
QVector moment(const Polytope& p) { return integrals_by_triangulation(p).moment; }

BoundaryIntegral boundary_integral(const Polytope& p) {
  auto in = integrals_by_triangulation(p);
  return {std::move(in.sigma_mass), std::move(in.sigma_moment)};
}

Rational donaldson_L(const Polytope& p, const QVector& linear, const Rational& constant) {
  if (linear.size() != p.dimension()) throw DomainError("affine function has the wrong dimension");
  const auto in = integrals_by_triangulation(p);
  Rational boundary = constant * in.sigma_mass;
  Rational interior = constant * in.volume;
  for (std::size_t i = 0; i < linear.size(); ++i) {
    boundary += linear[i] * in.sigma_moment[i];
    interior += linear[i] * in.moment[i];
  }
  return boundary - in.sigma_mass / in.volume * interior;
}

QVector futaki_vector(const Polytope& p) {
  const auto in = integrals_by_triangulation(p);
  QVector out(p.dimension());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = in.sigma_moment[i] / in.sigma_mass - in.moment[i] / in.volume;
  return out;
}

bool is_zero_vector(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

Polytope translate(const Polytope& p, const QVector& t) {
  auto hs = p.halfspaces();
  for (auto& h : hs) h.offset += dot(h.normal, t);
  return Polytope::from_halfspaces(std::move(hs));
}

Polytope transform(const Polytope& p, const std::vector<std::vector<Integer>>& u) {
  const std::size_t d = p.dimension();
  QMatrix m(d, d);
  if (u.size() != d) throw DomainError("transform: matrix size mismatch");
  for (std::size_t r = 0; r < d; ++r) {
    if (u[r].size() != d) throw DomainError("transform: matrix size mismatch");
    for (std::size_t c = 0; c < d; ++c) m(r, c) = u[r][c];
  }
  // Normals transform by U^{-T}; compute the inverse by elimination.
  QMatrix aug(d, 2 * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      aug(r, c) = m(r, c);
      aug(r, d + c) = r == c ? 1 : 0;
    }
  const auto ech = row_reduce(aug);
  if (ech.pivots.size() < d || ech.pivots[d - 1] != d - 1) throw DomainError("transform: singular matrix");
  auto hs = p.halfspaces();
  for (auto& h : hs) {
    std::vector<Integer> n(d, Integer(0));
    for (std::size_t c = 0; c < d; ++c) {
      Rational s = 0;
      for (std::size_t r = 0; r < d; ++r) s += ech.reduced(r, d + c) * h.normal[r];
      if (s.get_den() != 1) throw DomainError("transform: matrix is not unimodular");
      n[c] = s.get_num();
    }
    h.normal = std::move(n);
  }
  return Polytope::from_halfspaces(std::move(hs));
}

Polytope scale(const Polytope& p, const Rational& k) {
  if (k <= 0) throw DomainError("scale factor must be positive");
  auto hs = p.halfspaces();
  for (auto& h : hs) h.offset *= k;
  return Polytope::from_halfspaces(std::move(hs));
}

Polytope product(const Polytope& p, const Polytope& q) {
  const std::size_t dp = p.dimension(), dq = q.dimension();
  if (dp + dq > 3) throw DomainError("product dimension exceeds 3");
  std::vector<Halfspace> hs;
  for (const auto& h : p.halfspaces()) {
    auto n = h.normal;
    n.resize(dp + dq, Integer(0));
    hs.push_back({std::move(n), h.offset});
  }
  for (const auto& h : q.halfspaces()) {
    std::vector<Integer> n(dp, Integer(0));
    n.insert(n.end(), h.normal.begin(), h.normal.end());
    hs.push_back({std::move(n), h.offset});
  }
  return Polytope::from_halfspaces(std::move(hs));
}

Polytope parse_polytope(std::string_view text) {
  std::vector<Halfspace> hs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& msg) { return ParseError("line " + std::to_string(lineno) + ": " + msg, 1); };
    if (tokens.size() < 3 || tokens[tokens.size() - 2] != "<=") throw fail("expected 'n1 n2 [n3] <= c'");
    Halfspace h;
    try {
      for (std::size_t i = 0; i + 2 < tokens.size(); ++i) h.normal.emplace_back(tokens[i], 10);
      h.offset = parse_rational(tokens.back());
    } catch (const std::invalid_argument&) {
      throw fail("malformed number");
    } catch (const DomainError& e) {
      throw fail(e.what());
    }
    hs.push_back(std::move(h));
  }
  return Polytope::from_halfspaces(std::move(hs));
}

std::string to_text(const Polytope& p) {
  std::string out;
  for (const auto& h : p.halfspaces()) {
    for (const auto& x : h.normal) out += x.get_str() + " ";
    out += "<= " + to_string(h.offset) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families

namespace {

Halfspace hs(std::vector<long> n, const Rational& c) {
  std::vector<Integer> v(n.begin(), n.end());
  return {std::move(v), c};
}

std::vector<Halfspace> interval(const Rational& a) { return {hs({-1}, 0), hs({1}, a)}; }

std::vector<Halfspace> simplex2(const Rational& a) { return {hs({-1, 0}, 0), hs({0, -1}, 0), hs({1, 1}, a)}; }

std::vector<Halfspace> hexagon(const Rational& h, const Rational& a, const Rational& b, const Rational& c) {
  return {hs({-1, 0}, 0), hs({0, -1}, 0), hs({1, 1}, h), hs({-1, -1}, -a), hs({1, 0}, h - b), hs({0, 1}, h - c)};
}

std::vector<Halfspace> embed(const std::vector<Halfspace>& hs_list, std::size_t before, std::size_t after) {
  std::vector<Halfspace> out;
  for (const auto& h : hs_list) {
    std::vector<Integer> n(before, Integer(0));
    n.insert(n.end(), h.normal.begin(), h.normal.end());
    n.resize(n.size() + after, Integer(0));
    out.push_back({std::move(n), h.offset});
  }
  return out;
}

std::vector<Halfspace> join(std::vector<Halfspace> a, const std::vector<Halfspace>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

QVector q(std::initializer_list<long> xs) {
  QVector out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

const std::vector<ToricFamily>& toric_families() {
  static const std::vector<ToricFamily> families = {
      {"p1", {"a"}, q({2}), {}, 4, [](const QVector& v) { return interval(v[0]); }},
      {"p2", {"a"}, q({3}), {}, 4, [](const QVector& v) { return simplex2(v[0]); }},
      {"p1xp1", {"a", "b"}, q({2, 2}), {}, 4,
       [](const QVector& v) { return join(embed(interval(v[0]), 0, 1), embed(interval(v[1]), 1, 0)); }},
      {"p1xp2", {"a", "b"}, q({2, 3}), {}, 4,
       [](const QVector& v) { return join(embed(interval(v[0]), 0, 2), embed(simplex2(v[1]), 1, 0)); }},
      {"p1xp1xp1", {"a", "b", "c"}, q({2, 2, 2}), {}, 3,
       [](const QVector& v) {
         return join(join(embed(interval(v[0]), 0, 2), embed(interval(v[1]), 1, 1)), embed(interval(v[2]), 2, 0));
       }},
      {"s6", {"h", "a", "b", "c"}, q({3, 1, 1, 1}), {"h"}, 3,
       [](const QVector& v) { return hexagon(v[0], v[1], v[2], v[3]); }},
      {"p1xs6", {"p", "h", "a", "b", "c"}, q({2, 3, 1, 1, 1}), {"p", "h"}, 3,
       [](const QVector& v) { return join(embed(interval(v[0]), 0, 2), embed(hexagon(v[1], v[2], v[3], v[4]), 1, 0)); }},
      {"bl2lines", {"h", "a", "b"}, q({4, 1, 1}), {"h"}, 4,
       [](const QVector& v) {
         return std::vector<Halfspace>{hs({-1, 0, 0}, 0), hs({0, -1, 0}, 0), hs({0, 0, -1}, 0),
                                       hs({1, 1, 1}, v[0]), hs({0, 1, 1}, v[0] - v[1]), hs({0, -1, -1}, -v[2])};
       }},
  };
  return families;
}

const ToricFamily& toric_family(std::string_view id) {
  for (const auto& f : toric_families())
    if (f.id == id) return f;
  throw DomainError("unknown toric family '" + std::string(id) + "'");
}

Polytope class_to_polytope(const ToricFamily& family, const QVector& params) {
  if (params.size() != family.params.size())
    throw DomainError(family.id + " takes " + std::to_string(family.params.size()) + " parameters");
  try {
    return Polytope::from_halfspaces(family.halfspaces(params));
  } catch (const GeometryError& e) {
    std::string where;
    for (std::size_t i = 0; i < params.size(); ++i)
      where += (i ? ", " : "") + family.params[i] + "=" + to_string(params[i]);
    throw OutOfRegion(family.id + " at (" + where + ") is outside the Kähler region: " + e.what());
  }
}

std::vector<QVector> parse_linear_forms(const ToricFamily& family, const std::vector<std::string>& forms) {
  if (family.params.size() < 2) throw DomainError("loci need at least two parameters");
  std::vector<ProjectiveFactor> factor{ProjectiveFactor{family.params}};
  const RingPtr ring = make_ring(AmbientSpace(std::move(factor)));
  std::vector<QVector> out;
  for (const auto& text : forms) {
    const MultiPoly p = parse_poly(text, ring);
    if (p.is_zero() || p.multidegree()[0] != 1) throw DomainError("locus '" + text + "' is not a linear form");
    QVector row(family.params.size(), Rational(0));
    for (const auto& [e, c] : p.terms()) {
      const auto i = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
      row[i] = c.constant_value();
    }
    out.push_back(std::move(row));
  }
  return out;
}

ScanResult zero_locus_scan(const ToricFamily& family, const Rational& step, const std::vector<LocusCandidate>& loci,
                           unsigned jobs) {
  if (step <= 0) throw DomainError("grid step must be positive");
  ScanResult result;
  result.family = family.id;
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < family.params.size(); ++i)
    if (std::find(family.scan_fixed.begin(), family.scan_fixed.end(), family.params[i]) == family.scan_fixed.end()) {
      free_idx.push_back(i);
      result.free_params.push_back(family.params[i]);
    }
  std::vector<Rational> axis;
  for (Rational x = 0; x <= family.scan_bound; x += step) axis.push_back(x);

  std::vector<QVector> grid;
  std::vector<std::size_t> counter(free_idx.size(), 0);
  while (true) {
    QVector v;
    for (auto c : counter) v.push_back(axis[c]);
    grid.push_back(std::move(v));
    std::size_t k = counter.size();
    while (k > 0 && ++counter[k - 1] == axis.size()) counter[--k] = 0;
    if (k == 0) break;
  }

  auto full_params = [&](const QVector& free_values) {
    QVector p = family.anticanonical;
    for (std::size_t j = 0; j < free_idx.size(); ++j) p[free_idx[j]] = free_values[j];
    return p;
  };

  // 0 = skipped, 1 = nonzero, 2 = zero
  std::vector<int> status(grid.size(), 0);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
  auto work = [&](unsigned w) {
    for (std::size_t g = w; g < grid.size(); g += workers) {
      try {
        const Polytope poly = class_to_polytope(family, full_params(grid[g]));
        status[g] = is_zero_vector(futaki_vector(poly)) ? 2 : 1;
      } catch (const OutOfRegion&) {
        status[g] = 0;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  for (const auto& c : loci) result.loci.push_back({c.text, 0, 0});
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (status[g] == 0) {
      ++result.skipped;
      continue;
    }
    const bool zero = status[g] == 2;
    result.points.push_back({grid[g], zero});
    if (zero) ++result.zeros;
    const QVector p = full_params(grid[g]);
    bool on_any = false;
    for (std::size_t l = 0; l < loci.size(); ++l) {
      const bool on = std::all_of(loci[l].forms.begin(), loci[l].forms.end(), [&](const QVector& f) {
        Rational s = 0;
        for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * p[i];
        return is_zero(s);
      });
      if (on) {
        on_any = true;
        ++result.loci[l].on_locus;
        if (zero) ++result.loci[l].zero_on_locus;
      }
    }
    if (zero && !on_any) ++result.zeros_off_loci;
    if (!zero && on_any) ++result.nonzero_on_loci;
  }
  result.identically_zero = !result.points.empty() && result.zeros == result.points.size();
  result.zero_set_equals_union =
      !result.points.empty() && result.zeros_off_loci == 0 && result.nonzero_on_loci == 0;
  return result;
}

std::string format_scan(const ScanResult& scan) {
  std::string out;
  for (const auto& p : scan.points) {
    for (const auto& x : p.free_values) out += to_string(x) + " ";
    out += p.zero ? "-> zero\n" : "-> nonzero\n";
  }
  out += "locus:\n";
  out += "  family = " + scan.family + "\n";
  out += "  points = " + std::to_string(scan.points.size()) + "\n";
  out += "  skipped = " + std::to_string(scan.skipped) + "\n";
  out += "  zeros = " + std::to_string(scan.zeros) + "\n";
  out += std::string("  identically_zero = ") + (scan.identically_zero ? "true" : "false") + "\n";
  for (const auto& l : scan.loci) {
    out += "  candidate (" + l.text + "): on = " + std::to_string(l.on_locus) +
           ", zero = " + std::to_string(l.zero_on_locus) + "\n";
  }
  if (!scan.loci.empty()) {
    out += "  zeros_off_loci = " + std::to_string(scan.zeros_off_loci) + "\n";
    out += "  nonzero_on_loci = " + std::to_string(scan.nonzero_on_loci) + "\n";
    out += std::string("  zero_set_equals_union = ") + (scan.zero_set_equals_union ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace futaki
