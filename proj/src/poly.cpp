#include "futaki/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "futaki/automorphism.hpp"

namespace futaki {

AmbientSpace::AmbientSpace(std::vector<ProjectiveFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("ambient space needs at least one factor");
  std::unordered_set<std::string> seen;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (factors_[f].coords.size() < 2) throw DomainError("projective factor of dimension < 1");
    offsets_.push_back(factor_of_.size());
    for (const auto& name : factors_[f].coords) {
      if (!seen.insert(name).second) throw DomainError("duplicate coordinate name '" + name + "'");
      factor_of_.push_back(f);
    }
  }
}

const std::string& AmbientSpace::coord_name(std::size_t i) const {
  const auto f = factor_of(i);
  return factors_[f].coords[i - offsets_[f]];
}

std::optional<std::size_t> AmbientSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < coord_count(); ++i)
    if (coord_name(i) == name) return i;
  return std::nullopt;
}

std::string AmbientSpace::to_string() const {
  std::string out;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (f) out += " x ";
    out += "P" + std::to_string(factors_[f].dimension()) + "(";
    for (std::size_t k = 0; k < factors_[f].coords.size(); ++k) {
      if (k) out += ", ";
      out += factors_[f].coords[k];
    }
    out += ")";
  }
  return out;
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

AmbientSpace parse_ambient(std::string_view text) {
  std::vector<ProjectiveFactor> factors;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, i + 1); };
  while (true) {
    skip();
    if (i >= text.size() || text[i] != 'P') throw fail("expected 'P<n>(...)' factor");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw fail("expected factor dimension after 'P'");
    const auto dim = std::stoul(std::string(text.substr(start, i - start)));
    skip();
    if (i >= text.size() || text[i] != '(') throw fail("expected '('");
    ++i;
    ProjectiveFactor factor;
    while (true) {
      skip();
      start = i;
      if (i < text.size() && is_name_start(text[i]))
        while (i < text.size() && is_name_char(text[i])) ++i;
      if (start == i) throw fail("expected coordinate name");
      factor.coords.emplace_back(text.substr(start, i - start));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    if (factor.coords.size() != dim + 1)
      throw fail("P" + std::to_string(dim) + " needs " + std::to_string(dim + 1) + " coordinates");
    factors.push_back(std::move(factor));
    skip();
    if (i == text.size()) break;
    if (text[i] != 'x') throw fail("expected ' x ' between factors");
    ++i;
  }
  try {
    return AmbientSpace(std::move(factors));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1);
  }
}

ParamField::ParamField(std::string name, std::vector<Rational> excluded)
    : name_(std::move(name)), excluded_(std::move(excluded)) {}

bool ParamField::admissible(const Rational& value) const {
  return std::find(excluded_.begin(), excluded_.end(), value) == excluded_.end();
}

std::vector<Rational> ParamField::sample_values(std::size_t count) const {
  std::vector<Rational> out;
  const std::vector<Rational> head = {Rational(1, 2), 2, 3, Rational(1, 3)};
  for (const auto& v : head)
    if (out.size() < count && admissible(v)) out.push_back(v);
  for (long p = 5; out.size() < count; p += 2) {
    for (const Rational& v : {Rational(p), Rational(1, p)})
      if (out.size() < count && admissible(v)) out.push_back(v);
  }
  return out;
}

RingPtr make_ring(AmbientSpace ambient, ParamField params) {
  for (std::size_t i = 0; i < ambient.coord_count(); ++i)
    if (params.has_parameter() && ambient.coord_name(i) == params.name())
      throw DomainError("parameter '" + params.name() + "' clashes with a coordinate");
  return std::make_shared<const PolyRing>(PolyRing{std::move(ambient), std::move(params)});
}

void require_same_ambient(const AmbientSpace& a, const AmbientSpace& b, std::string_view what) {
  if (!(a == b)) throw DomainError(std::string(what) + ": ambient mismatch");
}

namespace {

std::vector<int> degree_of(const AmbientSpace& amb, const Exponents& e) {
  std::vector<int> deg(amb.factor_count(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) deg[amb.factor_of(i)] += e[i];
  return deg;
}

void add_into(TermMap& acc, const Exponents& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

TermMap multiply_terms(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_into(out, e, ca * cb);
    }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(RingPtr ring)
    : ring_(std::move(ring)), degree_(ring_->ambient.factor_count(), 0) {}

MultiPoly::MultiPoly(RingPtr ring, TermMap terms, std::vector<int> degree)
    : ring_(std::move(ring)), terms_(std::move(terms)), degree_(std::move(degree)) {}

MultiPoly MultiPoly::from_terms(RingPtr ring, TermMap terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  const auto& amb = ring->ambient;
  std::vector<int> degree(amb.factor_count(), 0);
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (e.size() != amb.coord_count()) throw DomainError("exponent vector length mismatch");
    auto d = degree_of(amb, e);
    if (first) {
      degree = std::move(d);
      first = false;
    } else if (d != degree) {
      throw InhomogeneousError("terms of differing multidegree");
    }
  }
  return MultiPoly(std::move(ring), std::move(terms), std::move(degree));
}

MultiPoly MultiPoly::constant(RingPtr ring, const RatFunc& c) {
  TermMap t;
  add_into(t, Exponents(ring->ambient.coord_count(), 0), c);
  return from_terms(std::move(ring), std::move(t));
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t coord) {
  Exponents e(ring->ambient.coord_count(), 0);
  e.at(coord) = 1;
  TermMap t;
  t.emplace(std::move(e), RatFunc(1));
  return from_terms(std::move(ring), std::move(t));
}

RatFunc MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ambient(ambient(), o.ambient(), "polynomial sum");
  TermMap sum = terms_;
  for (const auto& [e, c] : o.terms_) add_into(sum, e, c);
  *this = from_terms(ring_, std::move(sum));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += RatFunc(-1) * o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ambient(a.ambient(), b.ambient(), "polynomial product");
  return MultiPoly::from_terms(a.ring_, multiply_terms(a.terms_, b.terms_));
}

MultiPoly operator*(const RatFunc& c, const MultiPoly& p) {
  TermMap t;
  for (const auto& [e, x] : p.terms_) add_into(t, e, c * x);
  return MultiPoly::from_terms(p.ring_, std::move(t));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.ambient() == b.ambient() && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly out = constant(ring_, RatFunc(1));
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

MultiPoly MultiPoly::specialize(const Rational& value, RingPtr target) const {
  require_same_ambient(ambient(), target->ambient, "specialize");
  TermMap t;
  for (const auto& [e, c] : terms_) add_into(t, e, RatFunc(c.evaluate(value)));
  return from_terms(std::move(target), std::move(t));
}

namespace {

std::string monomial_string(const AmbientSpace& amb, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += amb.coord_name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Appends one term; `first` controls the leading sign convention.
void append_term(std::string& out, bool first, const RatFunc& c, const std::string& mono,
                 const std::string& var) {
  auto sign = [&](bool negative) {
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
  };
  auto with_mono = [&](const std::string& coef_text) {
    if (mono.empty())
      out += coef_text;
    else if (coef_text.empty())
      out += mono;
    else
      out += coef_text + "*" + mono;
  };
  if (c.is_constant()) {
    const Rational v = c.constant_value();
    sign(sgn(v) < 0);
    const Rational mag = abs(v);
    with_mono(mag == 1 && !mono.empty() ? std::string() : mag.get_str());
    return;
  }
  const auto& num = c.num();
  std::size_t nonzero = 0;
  for (const auto& x : num.coeffs()) nonzero += is_zero(x) ? 0 : 1;
  if (c.den().degree() == 0 && nonzero == 1) {
    const int e = num.degree();
    const Rational k = num.leading();
    sign(sgn(k) < 0);
    std::string text = abs(k) == 1 ? std::string() : Rational(abs(k)).get_str() + "*";
    text += var;
    if (e > 1) text += "^" + std::to_string(e);
    with_mono(text);
    return;
  }
  sign(false);
  std::string text = "(" + num.to_string(var) + ")";
  if (c.den().degree() > 0) text += "/(" + c.den().to_string(var) + ")";
  with_mono(text);
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(out, first, c, monomial_string(ambient(), e), ring_->params.name());
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, Name, Op, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start + 1});
    } else if (is_name_start(c)) {
      const std::size_t start = i;
      while (i < s.size() && is_name_char(s[i])) ++i;
      out.push_back({Tok::Name, std::string(s.substr(start, i - start)), start + 1});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Tok::Op, std::string(1, c), i + 1});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i + 1);
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : tokens_(tokenize(text)), ring_(ring) {}

  TermMap parse() {
    TermMap t = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().column);
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(std::string_view op) {
    if (peek().kind == Tok::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t nvars() const { return ring_->ambient.coord_count(); }

  TermMap constant(const RatFunc& c) const {
    TermMap t;
    add_into(t, Exponents(nvars(), 0), c);
    return t;
  }

  TermMap expr() {
    TermMap acc = term();
    while (true) {
      if (accept("+")) {
        for (const auto& [e, c] : term()) add_into(acc, e, c);
      } else if (accept("-")) {
        for (const auto& [e, c] : term()) add_into(acc, e, -c);
      } else {
        return acc;
      }
    }
  }

  TermMap term() {
    TermMap acc = factor();
    while (true) {
      if (accept("*")) {
        acc = multiply_terms(acc, factor());
      } else if (peek().kind == Tok::Op && peek().text == "/") {
        const std::size_t col = peek().column;
        ++pos_;
        const TermMap d = factor();
        const Exponents zero(nvars(), 0);
        if (d.empty()) throw ParseError("division by zero", col);
        if (d.size() != 1 || d.begin()->first != zero)
          throw ParseError("divisor must not involve coordinates", col);
        const RatFunc inv = RatFunc(1) / d.begin()->second;
        TermMap scaled;
        for (const auto& [e, c] : acc) add_into(scaled, e, c * inv);
        acc = std::move(scaled);
      } else {
        return acc;
      }
    }
  }

  TermMap factor() {
    if (accept("-")) {
      TermMap t = factor();
      for (auto& [e, c] : t) c = -c;
      return t;
    }
    if (accept("+")) return factor();
    TermMap base = atom();
    if (accept("^")) {
      const Token& tok = peek();
      if (tok.kind != Tok::Number) throw ParseError("exponent must be a non-negative integer", tok.column);
      const unsigned long e = std::stoul(tok.text);
      ++pos_;
      TermMap out = constant(RatFunc(1));
      for (unsigned long k = 0; k < e; ++k) out = multiply_terms(out, base);
      return out;
    }
    return base;
  }

  TermMap atom() {
    const Token tok = peek();
    switch (tok.kind) {
      case Tok::Number: {
        ++pos_;
        return constant(RatFunc(Rational(Integer(tok.text))));
      }
      case Tok::Name: {
        ++pos_;
        if (const auto idx = ring_->ambient.index_of(tok.text)) {
          Exponents e(nvars(), 0);
          e[*idx] = 1;
          TermMap t;
          t.emplace(std::move(e), RatFunc(1));
          return t;
        }
        if (ring_->params.has_parameter() && tok.text == ring_->params.name())
          return constant(RatFunc::parameter());
        throw ParseError("unknown symbol '" + tok.text + "'", tok.column);
      }
      case Tok::Op:
        if (tok.text == "(") {
          ++pos_;
          TermMap t = expr();
          if (!accept(")")) throw ParseError("expected ')'", peek().column);
          return t;
        }
        throw ParseError("unexpected '" + tok.text + "'", tok.column);
      case Tok::End:
        break;
    }
    throw ParseError("unexpected end of expression", tok.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) {
  return MultiPoly::from_terms(ring, PolyParser(text, ring).parse());
}

std::vector<int> multidegree(const MultiPoly& p) { return p.multidegree(); }

MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images, const RingPtr& target) {
  if (images.size() != p.ambient().coord_count()) throw DomainError("compose: wrong number of images");
  for (const auto& img : images) require_same_ambient(img.ambient(), target->ambient, "compose");
  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, RatFunc(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  TermMap acc;
  for (const auto& [e, c] : p.terms()) {
    MultiPoly prod = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) prod = prod * power(i, e[i]);
    for (const auto& [e2, c2] : prod.terms()) add_into(acc, e2, c2);
  }
  return MultiPoly::from_terms(target, std::move(acc));
}

MultiPoly pullback(const MultiPoly& p, const MonomialAutomorphism& tau) {
  require_same_ambient(p.ambient(), tau.ambient(), "pullback");
  return compose(p, tau.images(), p.ring());
}

void add_singular(std::vector<UPoly>& out, const UPoly& poly) {
  if (poly.degree() < 1) return;
  const UPoly m = poly.monic();
  if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
}

std::vector<Rational> rational_roots(const std::vector<UPoly>& polys) {
  std::set<Rational> roots;
  for (const auto& p : polys)
    for (const auto& r : p.rational_roots()) roots.insert(r);
  return {roots.begin(), roots.end()};
}

SpanResult in_span(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
  for (const auto& g : gens) require_same_ambient(p.ambient(), g.ambient(), "in_span");
  std::set<Exponents, DescendingLex> monomials;
  for (const auto& [e, c] : p.terms()) monomials.insert(e);
  for (const auto& g : gens)
    for (const auto& [e, c] : g.terms()) monomials.insert(e);
  const std::vector<Exponents> rows(monomials.begin(), monomials.end());
  Matrix<RatFunc> a(rows.size(), gens.size());
  std::vector<RatFunc> b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < gens.size(); ++c) a(r, c) = gens[c].coefficient(rows[r]);
    b[r] = p.coefficient(rows[r]);
  }
  SpanResult result;
  result.coefficients = solve<RatFunc>(a, std::span<const RatFunc>(b), [&](const RatFunc& pivot) {
    add_singular(result.singular, pivot.num());
    add_singular(result.singular, pivot.den());
  });
  if (result.coefficients)
    for (const auto& c : *result.coefficients) add_singular(result.singular, c.den());
  result.singular_values = rational_roots(result.singular);
  return result;
}

}  // namespace futaki
