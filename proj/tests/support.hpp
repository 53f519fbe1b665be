#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>

#include "futaki/catalog.hpp"
#include "futaki/character.hpp"
#include "futaki/toric.hpp"

namespace futaki::test {

inline QVector qv(std::initializer_list<Rational> xs) { return QVector(xs); }

inline QMatrix qm(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<QVector> r;
  for (const auto& row : rows) r.emplace_back(row);
  return QMatrix::from_rows(r);
}

inline RingPtr ring(const std::string& ambient, const std::string& param = "", std::vector<Rational> excluded = {}) {
  return make_ring(parse_ambient(ambient), param.empty() ? ParamField{} : ParamField(param, std::move(excluded)));
}

inline MonomialAutomorphism map_of(const RingPtr& r, std::initializer_list<const char*> images,
                                   std::vector<std::size_t> factor_source = {}) {
  std::vector<MultiPoly> imgs;
  for (const auto* s : images) imgs.push_back(parse_poly(s, r));
  if (factor_source.empty())
    for (std::size_t f = 0; f < r->ambient.factor_count(); ++f) factor_source.push_back(f);
  return MonomialAutomorphism::from_images(r, imgs, std::move(factor_source));
}

inline TorusGenerator torus(const RingPtr& r, std::initializer_list<long> w) {
  std::vector<Integer> v;
  for (auto x : w) v.emplace_back(x);
  return TorusGenerator(r->ambient, v);
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const Catalog& shipped_catalog() {
  static const Catalog cat = load_catalog(FUTAKI_DEFAULT_CATALOG);
  return cat;
}

inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(FUTAKI_TEST_DATA "/polytopes"))
    if (e.path().extension() == ".poly") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline Polytope corpus_polytope(const std::string& name) {
  return parse_polytope(read_file(std::filesystem::path(FUTAKI_TEST_DATA "/polytopes") / (name + ".poly")));
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace futaki::test
