#pragma once

// The ILW hierarchy: the explicit first Hamiltonian, hamiltonian flows for the
// bracket {,}_{d/dx}, and higher Hamiltonians fixed by commuting with h_1.

#include <stdexcept>
#include <vector>

#include "ilwhodge/diffpoly.hpp"
#include "ilwhodge/exactnum.hpp"
#include "ilwhodge/linsolve.hpp"
#include "ilwhodge/report.hpp"

namespace ilwhodge::ilw {

struct Hamiltonian {
  int index = 1;
  int genus_order = 0;
  LocalFunctional functional;
};

class HierarchyError : public std::runtime_error {
 public:
  enum class Kind { underdetermined, inconsistent };

  HierarchyError(Kind kind, int hbar_order, std::vector<DiffPoly> ambiguity, const std::string& what)
      : std::runtime_error(what), kind_(kind), hbar_order_(hbar_order), ambiguity_(std::move(ambiguity)) {}

  Kind kind() const { return kind_; }
  int hbar_order() const { return hbar_order_; }
  /// For underdetermined systems: densities spanning the undetermined directions.
  const std::vector<DiffPoly>& ambiguity() const { return ambiguity_; }

 private:
  Kind kind_;
  int hbar_order_;
  std::vector<DiffPoly> ambiguity_;
};

/// int (u^3/6 + sum_{g=1..G} h^g e^{g-1} C_g u u_{2g}) dx.
Hamiltonian h1(int genus_order, const CgTable& cg = {});

/// d/dx (delta h / delta u).
DiffPoly flow(const Hamiltonian& h);

/// Normal monomials of the given u-degree and differential degree.
std::vector<UMonomial> normal_monomials(int degree, int diff_degree);

/// Ansatz densities for h_i at hbar^g: h^g e^{g-(i+2-n)} m with m normal of
/// u-degree n in [2, i+2] and differential degree 2g.
std::vector<DiffPoly> ansatz(int index, int g);

/// {a, with} for each ansatz density a. The parallel kernel computes the
/// brackets concurrently; the serial one is the reference.
std::vector<LocalFunctional> bracket_columns(const std::vector<DiffPoly>& densities,
                                             const LocalFunctional& with, linsolve::Execution exec);

/// The unique h_i = int (u^{i+2}/(i+2)! + O(h)) dx commuting with h_1 up to
/// hbar^G. Throws HierarchyError if some order is inconsistent or leaves a
/// free direction.
Hamiltonian higher_hamiltonian(int index, int genus_order, const CgTable& cg = {},
                               linsolve::Execution exec = linsolve::Execution::parallel);

/// h1 for index 1, higher_hamiltonian otherwise.
Hamiltonian hamiltonian(int index, int genus_order, const CgTable& cg = {});

/// Throws std::logic_error if a monomial violates the grading: at h^g with
/// u-degree n the eps exponent is g - (i+2-n) and the differential degree 2g.
void check_grading(const Hamiltonian& h);

/// u u_1 + sum_g h^g e^{g-1} |B_2g|/(2g)! u_{2g+1}.
DiffPoly t1_flow_closed_form(int genus_order);

/// The closed-form second flow of the hierarchy.
DiffPoly t2_flow_closed_form(int genus_order);

VerificationReport verify_flow_t1(int genus_order, const CgTable& cg = {});
/// Also rebuilds h_2 from the closed-form flow by the homotopy formula and
/// checks it against the solved Hamiltonian; `seed` drives the Helmholtz probes.
VerificationReport verify_flow_t2(int genus_order, const CgTable& cg = {}, std::uint64_t seed = 20150101);
VerificationReport verify_commutation(int i, int j, int genus_order, const CgTable& cg = {});

}  // namespace ilwhodge::ilw
