#include "futaki/ratfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace futaki {

UPoly::UPoly(const Rational& c) {
  if (!futaki::is_zero(c)) coeffs_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::indeterminate() { return UPoly(std::vector<Rational>{0, 1}); }

void UPoly::trim() {
  while (!coeffs_.empty() && futaki::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UPoly operator-(UPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  UPoly rem = a;
  std::vector<Rational> quot(std::max(0, a.degree() - b.degree() + 1), Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / b.leading();
    quot[shift] = factor;
    for (int i = 0; i <= b.degree(); ++i) rem.coeffs_[i + shift] -= factor * b.coeffs_[i];
    rem.trim();
  }
  return {UPoly(std::move(quot)), rem};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> UPoly::rational_roots() const {
  std::set<Rational> roots;
  if (degree() <= 0) return {};
  std::size_t low = 0;
  while (futaki::is_zero(coeffs_[low])) ++low;
  if (low > 0) roots.insert(Rational(0));
  // Clear denominators of the part without the p^low factor.
  Integer lcm = 1;
  for (std::size_t i = low; i < coeffs_.size(); ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), coeffs_[i].get_den_mpz_t());
  const Integer a0 = Integer(coeffs_[low] * lcm);
  const Integer an = Integer(leading() * lcm);
  if (coeffs_.size() - low > 1) {
    for (const auto& p : divisors(a0))
      for (const auto& q : divisors(an))
        for (int sign : {1, -1}) {
          const Rational cand = make_rational(sign * p, q);
          if (futaki::is_zero(evaluate(cand))) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

UPoly UPoly::strip_roots(const std::vector<Rational>& values) const {
  UPoly rest = *this;
  if (rest.is_zero()) return rest;
  for (const auto& v : values) {
    const UPoly linear(std::vector<Rational>{-v, 1});
    while (rest.degree() >= 1 && futaki::is_zero(rest.evaluate(v))) rest = divmod(rest, linear).first;
  }
  return rest;
}

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (futaki::is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    const UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = UPoly::divmod(num_, g).first;
      den_ = UPoly::divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_ * UPoly(1 / lead);
    den_ = den_ * UPoly(1 / lead);
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("coefficient depends on the parameter");
  return num_.coeff(0) / den_.coeff(0);
}

Rational RatFunc::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (futaki::is_zero(d)) throw DomainError("parameter value " + x.get_str() + " is a pole");
  return num_.evaluate(x) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by zero in the parameter field");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc out(1);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

std::string RatFunc::to_string(std::string_view var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace futaki
