#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace futaki {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation is given arguments outside its domain
/// (non-square matrix, mismatched ambient, zero denominator, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p" or "p/q" with optional leading sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const QVector& v);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace futaki
