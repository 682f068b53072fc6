#pragma once

// Bernoulli numbers and the genus constants built from them.

#include <map>

#include "ilwhodge/rational.hpp"

namespace ilwhodge {

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

/// B_n with the z/(e^z - 1) convention, so B_1 = -1/2. Thread-safe cache.
Rational bernoulli(unsigned n);

/// |B_{2g}| / (2 (2g)!), g >= 1.
Rational c_g(int g);

/// |B_{2g}| / (2g)!, the dispersion coefficient of the first ILW flow.
Rational dispersion_coeff(int g);

/// (-1)^g / (2^{2g} (2g+1)!), the Miura coefficients (g >= 1).
Rational miura_coeff(int g);

/// The C_g constants as consumed by the hierarchy and the linear-term check.
/// Holds optional additive perturbations so negative controls can inject a
/// fault into a single C_g without touching the Bernoulli machinery.
class CgTable {
 public:
  CgTable() = default;

  Rational operator()(int g) const;
  CgTable& perturb(int g, const Rational& delta);
  bool perturbed() const { return !delta_.empty(); }
  const std::map<int, Rational>& perturbations() const { return delta_; }

 private:
  std::map<int, Rational> delta_;
};

}  // namespace ilwhodge
