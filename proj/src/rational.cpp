#include "futaki/rational.hpp"

#include <cctype>

namespace futaki {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  Integer num, den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, num)
                      : parse_integer(text.substr(0, slash), num) &&
                            parse_integer(text.substr(slash + 1), den) && text[slash + 1] != '-' &&
                            text[slash + 1] != '+';
  if (!ok) throw DomainError("not a rational literal: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace futaki
