#include "ilwhodge/exactnum.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace ilwhodge {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard lock(bernoulli_mutex);
  // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
  for (unsigned m = static_cast<unsigned>(bernoulli_cache.size()); m <= n; ++m) {
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * bernoulli_cache[k];
    bernoulli_cache.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return bernoulli_cache[n];
}

Rational c_g(int g) {
  if (g < 1) throw std::invalid_argument("c_g: genus must be >= 1");
  return dispersion_coeff(g) / Rational(2);
}

Rational dispersion_coeff(int g) {
  if (g < 1) throw std::invalid_argument("dispersion_coeff: genus must be >= 1");
  const auto n = static_cast<unsigned>(2 * g);
  return bernoulli(n).abs() / Rational(factorial(n));
}

Rational miura_coeff(int g) {
  if (g < 1) throw std::invalid_argument("miura_coeff: genus must be >= 1");
  mpz_class den = factorial(static_cast<unsigned>(2 * g + 1));
  den <<= static_cast<mp_bitcnt_t>(2 * g);
  return Rational(mpz_class(g % 2 == 0 ? 1 : -1), den);
}

Rational CgTable::operator()(int g) const {
  Rational value = c_g(g);
  if (auto it = delta_.find(g); it != delta_.end()) value += it->second;
  return value;
}

CgTable& CgTable::perturb(int g, const Rational& delta) {
  if (g < 1) throw std::invalid_argument("CgTable::perturb: genus must be >= 1");
  delta_[g] += delta;
  return *this;
}

}  // namespace ilwhodge
