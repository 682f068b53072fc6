#include <algorithm>
#include <stdexcept>

#include "ilwhodge/diffpoly.hpp"

namespace ilwhodge {

namespace {

constexpr int kHelmholtzProbes = 6;

}  // namespace

LocalFunctional reconstruct_functional_from_flow(const DiffPoly& q, int g_max, std::uint64_t seed) {
  const DiffPoly flow = q.truncate_hbar(g_max);
  if (!variational_derivative(flow).is_zero())
    throw std::domain_error("reconstruct_functional_from_flow: flow is not a total x-derivative");
  const IntegratedDensity parts = integrate_by_parts(flow);
  if (!parts.normal.is_zero())
    throw std::domain_error("reconstruct_functional_from_flow: flow has a non-exact remainder");
  const DiffPoly& phi = parts.antiderivative;

  // phi must be a variational gradient: its Frechet derivative is formally
  // self-adjoint, i.e. int a D_phi(b) = int b D_phi(a).
  std::mt19937_64 rng(seed);
  const int diff = std::max(2, phi.max_derivative() + 1);
  for (int probe = 0; probe < kHelmholtzProbes; ++probe) {
    const DiffPoly a = random_diffpoly(rng, 3, 2, diff, 0);
    const DiffPoly b = random_diffpoly(rng, 3, 2, diff, 0);
    if (!(normalize(a * frechet_apply(phi, b)) == normalize(b * frechet_apply(phi, a))))
      throw std::domain_error("reconstruct_functional_from_flow: antiderivative is not a variational gradient");
  }

  // Homotopy formula: h = int_0^1 int u phi[lambda u] dx dlambda; a term of
  // u-degree n in phi picks up 1/(n+1).
  DiffPoly density;
  for (const auto& [m, c] : phi.terms()) {
    density.add_term(m.with(0, 1), c * Rational(1, m.degree() + 1));
  }
  return normalize(density);
}

}  // namespace ilwhodge
