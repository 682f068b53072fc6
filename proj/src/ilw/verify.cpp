#include "ilwhodge/ilw.hpp"

namespace ilwhodge::ilw {

DiffPoly t1_flow_closed_form(int genus_order) {
  DiffPoly q = DiffPoly::term(Rational(1), 0, 0, UMonomial::from_indices({0, 1}));
  for (int g = 1; g <= genus_order; ++g) {
    q += DiffPoly::term(dispersion_coeff(g), g, g - 1, UMonomial::from_indices({2 * g + 1}));
  }
  return q;
}

DiffPoly t2_flow_closed_form(int genus_order) {
  const DiffPoly u = DiffPoly::u();
  const DiffPoly u2 = u * u;
  DiffPoly q = DiffPoly::term(Rational(1, 2), 0, 0, UMonomial::from_indices({0, 0, 1}));
  for (int g = 1; g <= genus_order; ++g) {
    const Rational d = dispersion_coeff(g);
    DiffPoly bracket = total_x_derivative(u * DiffPoly::u(2 * g)) * Rational(2) +
                       total_x_derivative(u2, 2 * g + 1);
    q += bracket * DiffPoly::coeff(d / Rational(4), g, g - 1);
    if (g >= 2) q += DiffPoly::term(d * Rational(g + 1), g, g - 2, UMonomial::from_indices({2 * g + 1}));
  }
  return q;
}

VerificationReport verify_flow_t1(int genus_order, const CgTable& cg) {
  VerificationReport r;
  r.name = "ilw-t1";
  r.order_checked = genus_order;
  const DiffPoly actual = flow(h1(genus_order, cg));
  const DiffPoly expected = t1_flow_closed_form(genus_order);
  r.first_mismatch = first_difference(expected, actual, genus_order);
  r.details.push_back({{"flow", pretty(actual)}, {"expected", pretty(expected)}});
  return r;
}

VerificationReport verify_flow_t2(int genus_order, const CgTable& cg, std::uint64_t seed) {
  VerificationReport r;
  r.name = "ilw-t2";
  r.order_checked = genus_order;
  const DiffPoly expected = t2_flow_closed_form(genus_order);
  try {
    const Hamiltonian h2 = higher_hamiltonian(2, genus_order, cg);
    const DiffPoly actual = flow(h2);
    r.first_mismatch = first_difference(expected, actual, genus_order);
    if (!r.first_mismatch) {
      const LocalFunctional rebuilt = reconstruct_functional_from_flow(expected, genus_order, seed);
      r.first_mismatch = first_difference(h2.functional.density(), rebuilt.density(), genus_order);
      if (r.first_mismatch) r.first_mismatch->note = "Hamiltonian rebuilt from the closed-form flow differs";
    }
    r.details.push_back({{"hamiltonian", pretty(h2.functional.density())},
                         {"flow", pretty(actual)},
                         {"expected", pretty(expected)}});
  } catch (const HierarchyError& err) {
    Mismatch mm;
    mm.hbar_order = err.hbar_order();
    mm.term = "h_2";
    mm.note = err.what();
    r.first_mismatch = mm;
  }
  return r;
}

VerificationReport verify_commutation(int i, int j, int genus_order, const CgTable& cg) {
  VerificationReport r;
  r.name = "commute(" + std::to_string(i) + "," + std::to_string(j) + ")";
  r.order_checked = genus_order;
  try {
    const Hamiltonian hi = hamiltonian(i, genus_order, cg);
    const Hamiltonian hj = hamiltonian(j, genus_order, cg);
    const LocalFunctional b = poisson_bracket(hi.functional, hj.functional).truncate_hbar(genus_order);
    r.first_mismatch = first_difference(DiffPoly(), b.density(), genus_order);
    r.details.push_back({{"i", i}, {"j", j}, {"bracket", pretty(b.density())}});
  } catch (const HierarchyError& err) {
    Mismatch mm;
    mm.hbar_order = err.hbar_order();
    mm.term = "h_" + std::to_string(std::max(i, j));
    mm.note = err.what();
    r.first_mismatch = mm;
  }
  return r;
}

}  // namespace ilwhodge::ilw
