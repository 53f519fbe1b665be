#pragma once

// The coefficient field Q(p) of catalog polynomials: rational functions in at
// most one declared parameter p.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "futaki/rational.hpp"

namespace futaki {

/// Dense univariate polynomial over Q; coefficient i multiplies p^i.
class UPoly {
 public:
  UPoly() = default;
  UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  UPoly(const Rational& c);             // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly indeterminate();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator-(UPoly a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws on division by zero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd (zero only when both inputs are zero).
  static UPoly gcd(UPoly a, UPoly b);

  /// Distinct rational roots, ascending.
  std::vector<Rational> rational_roots() const;

  /// Removes every factor (p - e) for e in `values`; what remains carries the
  /// roots not covered by them.
  UPoly strip_roots(const std::vector<Rational>& values) const;

  std::string to_string(std::string_view var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(p): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}             // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  static RatFunc parameter() { return RatFunc(UPoly::indeterminate()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant element; throws DomainError otherwise.
  Rational constant_value() const;

  /// Value at p = x; throws DomainError when x is a pole.
  Rational evaluate(const Rational& x) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(unsigned e) const;

  /// Canonical text: the numerator alone, or "(num)/(den)".
  std::string to_string(std::string_view var) const;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace futaki
