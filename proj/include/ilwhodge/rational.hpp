#pragma once

// Exact rational scalar used by every module. Backed by GMP's mpq_class,
// which keeps the value canonical (reduced, positive denominator) after
// every operation.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ilwhodge {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT: implicit from integers is intended
  Rational(long n, long d);
  explicit Rational(mpz_class n) : value_(std::move(n)) {}
  Rational(mpz_class n, mpz_class d);
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Parses "p/q" or "p" (optional leading '-' on the numerator).
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational reciprocal() const;

  /// "p/q", or "p" when q = 1. The sign lives on the numerator.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

}  // namespace ilwhodge
