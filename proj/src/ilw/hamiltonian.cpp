#include <map>
#include <sstream>
#include <tuple>

#include "ilwhodge/ilw.hpp"

namespace ilwhodge::ilw {

namespace {

void enumerate(int remaining_count, int remaining_sum, int min_index, std::vector<int>& current,
               std::vector<UMonomial>& out) {
  if (remaining_count == 0) {
    if (remaining_sum == 0) {
      UMonomial m = UMonomial::from_indices(current);
      if (m.is_normal()) out.push_back(std::move(m));
    }
    return;
  }
  for (int k = min_index; k * remaining_count <= remaining_sum; ++k) {
    current.push_back(k);
    enumerate(remaining_count - 1, remaining_sum - k, k, current, out);
    current.pop_back();
  }
}

// Row key of a bracket coefficient: (monomial, hbar exponent, eps exponent).
using RowKey = std::tuple<UMonomial, int, int>;

struct RowKeyOrder {
  bool operator()(const RowKey& a, const RowKey& b) const {
    const auto& [ma, ha, ea] = a;
    const auto& [mb, hb, eb] = b;
    if (ha != hb) return ha < hb;
    if (!(ma == mb)) return UMonomialOrder{}(ma, mb);
    return ea < eb;
  }
};

}  // namespace

Hamiltonian h1(int genus_order, const CgTable& cg) {
  if (genus_order < 0) throw std::invalid_argument("h1: genus order must be >= 0");
  DiffPoly density = DiffPoly::term(Rational(1, 6), 0, 0, UMonomial::from_indices({0, 0, 0}));
  for (int g = 1; g <= genus_order; ++g) {
    density += DiffPoly::term(cg(g), g, g - 1, UMonomial::from_indices({0, 2 * g}));
  }
  return {1, genus_order, normalize(density)};
}

DiffPoly flow(const Hamiltonian& h) { return hamiltonian_flow(h.functional); }

std::vector<UMonomial> normal_monomials(int degree, int diff_degree) {
  std::vector<UMonomial> out;
  std::vector<int> current;
  if (degree < 0 || diff_degree < 0) return out;
  enumerate(degree, diff_degree, 0, current, out);
  return out;
}

std::vector<DiffPoly> ansatz(int index, int g) {
  std::vector<DiffPoly> out;
  for (int n = 2; n <= index + 2; ++n) {
    const int e = g - (index + 2 - n);
    if (e < 0) continue;
    for (const auto& m : normal_monomials(n, 2 * g)) out.push_back(DiffPoly::term(Rational(1), g, e, m));
  }
  return out;
}

std::vector<LocalFunctional> bracket_columns(const std::vector<DiffPoly>& densities,
                                             const LocalFunctional& with, linsolve::Execution exec) {
  const DiffPoly rhs = hamiltonian_flow(with);
  std::vector<LocalFunctional> out(densities.size());
  const auto n = static_cast<long>(densities.size());
  if (exec == linsolve::Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long a = 0; a < n; ++a) out[a] = normalize(variational_derivative(densities[a]) * rhs);
  } else {
    for (long a = 0; a < n; ++a) out[a] = normalize(variational_derivative(densities[a]) * rhs);
  }
  return out;
}

Hamiltonian higher_hamiltonian(int index, int genus_order, const CgTable& cg, linsolve::Execution exec) {
  if (index < 2) throw std::invalid_argument("higher_hamiltonian: index must be >= 2");
  if (genus_order < 0) throw std::invalid_argument("higher_hamiltonian: genus order must be >= 0");

  const LocalFunctional first = h1(genus_order, cg).functional;
  std::vector<LocalFunctional> first_parts;
  for (int g = 0; g <= genus_order; ++g) first_parts.push_back(normalize(first.density().hbar_part(g)));

  std::vector<DiffPoly> parts(genus_order + 1);
  parts[0] = DiffPoly::term(Rational(mpz_class(1), factorial(static_cast<unsigned>(index + 2))), 0, 0,
                            UMonomial(std::vector<int>{index + 2}));

  for (int g = 1; g <= genus_order; ++g) {
    // {h^(g), h1^(0)} = -sum_{g' < g} {h^(g'), h1^(g - g')}
    LocalFunctional known;
    for (int gp = 0; gp < g; ++gp) known = known + poisson_bracket(normalize(parts[gp]), first_parts[g - gp]);

    const std::vector<DiffPoly> unknowns = ansatz(index, g);
    const std::vector<LocalFunctional> columns = bracket_columns(unknowns, first_parts[0], exec);

    std::map<RowKey, std::size_t, RowKeyOrder> rows;
    auto collect = [&](const DiffPoly& p) {
      for (const auto& [m, c] : p.terms()) {
        for (const auto& [e, v] : c.terms()) rows.try_emplace({m, e[0], e[1]}, 0);
      }
    };
    collect(known.density());
    for (const auto& col : columns) collect(col.density());
    std::size_t r = 0;
    for (auto& [key, idx] : rows) idx = r++;

    linsolve::Matrix a(rows.size(), unknowns.size());
    std::vector<Rational> b(rows.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (const auto& [m, coeff] : columns[c].density().terms()) {
        for (const auto& [e, v] : coeff.terms()) a(rows.at({m, e[0], e[1]}), c) = v;
      }
    }
    for (const auto& [m, coeff] : known.density().terms()) {
      for (const auto& [e, v] : coeff.terms()) b[rows.at({m, e[0], e[1]})] = -v;
    }

    const linsolve::Solution sol = linsolve::solve(a, b, exec);
    if (!sol.consistent) {
      std::ostringstream os;
      os << "higher_hamiltonian(" << index << "): no commuting correction at hbar^" << g;
      throw HierarchyError(HierarchyError::Kind::inconsistent, g, {}, os.str());
    }
    if (!sol.nullspace.empty()) {
      std::vector<DiffPoly> basis;
      for (const auto& v : sol.nullspace) {
        DiffPoly d;
        for (std::size_t k = 0; k < v.size(); ++k) d += unknowns[k] * v[k];
        basis.push_back(std::move(d));
      }
      std::ostringstream os;
      os << "higher_hamiltonian(" << index << "): " << basis.size()
         << "-dimensional ambiguity at hbar^" << g;
      throw HierarchyError(HierarchyError::Kind::underdetermined, g, std::move(basis), os.str());
    }
    for (std::size_t k = 0; k < unknowns.size(); ++k) parts[g] += unknowns[k] * sol.particular[k];
  }

  DiffPoly density;
  for (const auto& p : parts) density += p;
  Hamiltonian h{index, genus_order, normalize(density)};
  check_grading(h);
  if (!poisson_bracket(h.functional, first).truncate_hbar(genus_order).is_zero())
    throw std::logic_error("higher_hamiltonian: solution does not commute with h1");
  return h;
}

Hamiltonian hamiltonian(int index, int genus_order, const CgTable& cg) {
  if (index == 1) return h1(genus_order, cg);
  return higher_hamiltonian(index, genus_order, cg);
}

void check_grading(const Hamiltonian& h) {
  for (const auto& [m, c] : h.functional.density().terms()) {
    for (const auto& [e, v] : c.terms()) {
      const int g = e[0];
      const int n = m.degree();
      if (m.diff_degree() != 2 * g || e[1] != g - (h.index + 2 - n)) {
        throw std::logic_error("hamiltonian h_" + std::to_string(h.index) + " violates the grading at " +
                               pretty(DiffPoly::term(v, e[0], e[1], m)));
      }
    }
  }
}

}  // namespace ilwhodge::ilw
