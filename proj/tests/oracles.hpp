#pragma once

// Test-only reference computations. Each one takes a route that does not go
// through the library code it is used to check.

#include <vector>

#include "ilwhodge/rational.hpp"

namespace oracle {

using ilwhodge::Rational;
using Poly = std::vector<Rational>;  // dense univariate, index = exponent

inline Rational fact(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

/// Akiyama-Tanigawa; yields B_1 = +1/2, all other indices agree with the
/// z/(e^z - 1) convention.
inline Rational bernoulli_at(int n) {
  std::vector<Rational> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

/// sin(t/2)/(t/2) straight from the sine Taylor series, truncated below t^n.
inline Poly sinc_half_taylor(int n) {
  Poly p(n);
  for (int m = 0; 2 * m < n; ++m) {
    Rational half_pow(1);
    for (int i = 0; i < 2 * m; ++i) half_pow *= Rational(1, 2);
    p[2 * m] = Rational(m % 2 == 0 ? 1 : -1) * half_pow / fact(2 * m + 1);
  }
  return p;
}

/// Long division 1/p for p(0) != 0, truncated below t^n.
inline Poly divide_one_by(const Poly& p, int n) {
  Poly q(n);
  for (int i = 0; i < n; ++i) {
    Rational acc = i == 0 ? Rational(1) : Rational();
    for (int j = 1; j <= i && j < static_cast<int>(p.size()); ++j) acc -= p[j] * q[i - j];
    q[i] = acc / p[0];
  }
  return q;
}

inline Poly mul(const Poly& a, const Poly& b, int n) {
  Poly r(n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j < static_cast<std::size_t>(n); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Coefficients c[d][i] of t^d k^i in ((t/2)/sin(t/2))^{k+1}, d < n, i <= kmax,
/// via base^{k+1} = base * sum_i binom(k, i) (base - 1)^i with binom(k, i)
/// expanded as a polynomial in k.
inline std::vector<std::vector<Rational>> one_point_bruteforce(int n, int kmax) {
  const Poly base = divide_one_by(sinc_half_taylor(n), n);
  Poly x = base;
  x[0] -= Rational(1);
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(kmax + 1));
  Poly xpow(n);
  xpow[0] = Rational(1);
  // falling factorial k(k-1)...(k-i+1) as polynomial in k
  std::vector<Rational> falling{Rational(1)};
  for (int i = 0; 2 * i < n + 1; ++i) {
    const Poly term = mul(base, xpow, n);
    for (int d = 0; d < n; ++d) {
      for (std::size_t p = 0; p < falling.size() && p <= static_cast<std::size_t>(kmax); ++p)
        out[d][p] += term[d] * falling[p] / fact(i);
    }
    std::vector<Rational> next(falling.size() + 1);
    for (std::size_t p = 0; p < falling.size(); ++p) {
      next[p + 1] += falling[p];
      next[p] -= Rational(i) * falling[p];
    }
    falling = next;
    xpow = mul(xpow, x, n);
  }
  return out;
}

/// Number of multisets of `count` derivative indices with the given sum.
inline long multisets(int count, int sum, int min_index = 0) {
  if (count == 0) return sum == 0 ? 1 : 0;
  long total = 0;
  for (int k = min_index; k * count <= sum; ++k) total += multisets(count - 1, sum - k, k);
  return total;
}

}  // namespace oracle
