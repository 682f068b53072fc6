#include <algorithm>
#include <stdexcept>

#include "ilwhodge/diffpoly.hpp"
#include "ilwhodge/exactnum.hpp"

namespace ilwhodge {

DiffPoly substitute_even_operator(const DiffPoly& p, const std::vector<Rational>& coeffs, int g_max) {
  if (g_max < 0) throw std::invalid_argument("substitute_even_operator: negative order");
  const int top = p.max_derivative();
  std::vector<DiffPoly> image(std::max(0, top + 1));
  for (int k = 0; k <= top; ++k) {
    image[k] = DiffPoly::u(k);
    for (int g = 1; g <= g_max && g <= static_cast<int>(coeffs.size()); ++g) {
      image[k] += DiffPoly::term(coeffs[g - 1], g, g, UMonomial::from_indices({k + 2 * g}));
    }
  }
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    DiffPoly acc = DiffPoly::term(c, UMonomial()).truncate_hbar(g_max);
    for (const auto& [k, mult] : m.pairs()) {
      for (int i = 0; i < mult; ++i) acc = (acc * image[k]).truncate_hbar(g_max);
    }
    out += acc;
  }
  return out;
}

DiffPoly miura_forward(const DiffPoly& p, int g_max) {
  std::vector<Rational> coeffs;
  for (int g = 1; g <= g_max; ++g) coeffs.push_back(miura_coeff(g));
  return substitute_even_operator(p, coeffs, g_max);
}

std::vector<Rational> miura_inverse_coeffs(int g_max) {
  // The forward map is A(h e d^2) with A(z^2) = sin(z/2)/(z/2); its inverse
  // has the coefficients of (z/2)/sin(z/2).
  const MultiSeries inv = inverse(sinc_half(2 * g_max + 1));
  std::vector<Rational> out;
  for (int g = 1; g <= g_max; ++g) out.push_back(inv.coefficient({2 * g}));
  return out;
}

DiffPoly miura_inverse(const DiffPoly& p, int g_max) {
  return substitute_even_operator(p, miura_inverse_coeffs(g_max), g_max);
}

}  // namespace ilwhodge
