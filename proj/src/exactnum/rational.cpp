#include "ilwhodge/rational.hpp"

#include <stdexcept>

namespace ilwhodge {

Rational::Rational(long n, long d) : value_(n, d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpz_class n, mpz_class d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw std::invalid_argument("Rational::parse: missing digits");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9')
      throw std::invalid_argument("Rational::parse: bad character in '" + std::string(s) + "'");
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  mpz_class num = parse_integer(text.substr(0, slash), true);
  mpz_class den = parse_integer(text.substr(slash + 1), false);
  return Rational(std::move(num), std::move(den));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const { return value_.get_str(10); }

}  // namespace ilwhodge
