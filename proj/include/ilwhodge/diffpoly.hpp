#pragma once

// Differential polynomials in one dependent variable u with coefficients that
// are polynomials in hbar ("h") and epsilon ("e"), local functionals modulo
// total x-derivatives, and the variational calculus on them.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ilwhodge/rational.hpp"
#include "ilwhodge/series.hpp"

namespace ilwhodge {

/// Product of powers of u_k = d^k u / dx^k. mult()[k] is the multiplicity of
/// u_k; trailing zeros are trimmed so equal monomials compare equal.
class UMonomial {
 public:
  UMonomial() = default;
  explicit UMonomial(std::vector<int> mult);
  /// Builds from a list of derivative indices, e.g. {0, 2} = u*u_2.
  static UMonomial from_indices(const std::vector<int>& indices);

  const std::vector<int>& mult() const { return mult_; }
  int multiplicity(int k) const { return k < static_cast<int>(mult_.size()) ? mult_[k] : 0; }
  int degree() const;       // N = sum mult(k)
  int diff_degree() const;  // D = sum k mult(k)
  int top() const { return static_cast<int>(mult_.size()) - 1; }  // -1 for the constant monomial
  bool is_constant() const { return mult_.empty(); }

  UMonomial times(const UMonomial& o) const;
  UMonomial with(int k, int delta) const;  // multiplicity of u_k adjusted by delta

  /// Integration-by-parts normal monomials: constants, powers of u, and
  /// monomials whose highest derivative occurs at least twice.
  bool is_normal() const;

  std::vector<std::pair<int, int>> pairs() const;  // [(k, mult)] with mult > 0

  friend bool operator==(const UMonomial&, const UMonomial&) = default;

 private:
  void trim();
  std::vector<int> mult_;
};

/// Canonical order: differential degree, then the multiplicity vector.
struct UMonomialOrder {
  bool operator()(const UMonomial& a, const UMonomial& b) const;
};

class DiffPoly {
 public:
  using Coeff = MultiSeries;  // polynomial in h, e
  using TermMap = std::map<UMonomial, Coeff, UMonomialOrder>;

  /// Coefficient-ring bound; large enough that no computation in this
  /// project reaches it, so coefficients behave as polynomials.
  static constexpr int kCoeffOrder = 4096;
  static const std::vector<VarSpec>& coeff_vars();
  static Coeff coeff(const Rational& c, int h = 0, int e = 0);

  DiffPoly() = default;

  static DiffPoly constant(const Rational& c);
  static DiffPoly u(int k = 0);
  static DiffPoly term(const Rational& c, int h, int e, const UMonomial& m);
  static DiffPoly term(const Coeff& c, const UMonomial& m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const UMonomial& m, const Coeff& c);
  Coeff coefficient(const UMonomial& m) const;
  /// Rational coefficient of h^h e^e * m.
  Rational coefficient(const UMonomial& m, int h, int e) const;

  int max_derivative() const;  // -1 if no u dependence
  int max_hbar() const;        // -1 for zero

  /// Drops every term with hbar exponent > g_max.
  DiffPoly truncate_hbar(int g_max) const;
  /// Only the hbar^g part (as a DiffPoly still carrying h^g).
  DiffPoly hbar_part(int g) const;
  /// Partial derivative with respect to u_k.
  DiffPoly partial_u(int k) const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& c);
  DiffPoly& operator*=(const Coeff& c);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
  friend DiffPoly operator*(DiffPoly a, const Coeff& c) { return a *= c; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// A density modulo total x-derivatives, held in integration-by-parts normal
/// form (every monomial satisfies UMonomial::is_normal). Equality of
/// functionals is equality of normal densities.
class LocalFunctional {
 public:
  LocalFunctional() = default;
  const DiffPoly& density() const { return density_; }
  bool is_zero() const { return density_.is_zero(); }

  LocalFunctional truncate_hbar(int g_max) const;

  friend LocalFunctional normalize(const DiffPoly& p);
  friend LocalFunctional operator+(const LocalFunctional& a, const LocalFunctional& b);
  friend LocalFunctional operator-(const LocalFunctional& a, const LocalFunctional& b);
  friend LocalFunctional operator*(const LocalFunctional& a, const Rational& c);
  friend bool operator==(const LocalFunctional&, const LocalFunctional&) = default;

 private:
  explicit LocalFunctional(DiffPoly normal) : density_(std::move(normal)) {}
  DiffPoly density_;
};

/// d/dx: sum_k dp/du_k * u_{k+1}.
DiffPoly total_x_derivative(const DiffPoly& p);
DiffPoly total_x_derivative(const DiffPoly& p, int times);

struct IntegratedDensity {
  DiffPoly normal;          // normal-form representative
  DiffPoly antiderivative;  // p = normal + d/dx(antiderivative)
};

/// Integration by parts down to normal form, keeping track of the exact
/// total derivative that was removed.
IntegratedDensity integrate_by_parts(const DiffPoly& p);

LocalFunctional normalize(const DiffPoly& p);

/// Euler operator sum_k (-d/dx)^k df/du_k.
DiffPoly variational_derivative(const DiffPoly& density);
DiffPoly variational_derivative(const LocalFunctional& h);

/// {h, f} = int (dh/du) d/dx (df/du) dx, in normal form.
LocalFunctional poisson_bracket(const LocalFunctional& h, const LocalFunctional& f);

/// d/dx of the variational gradient: the hamiltonian flow of h for d/dx.
DiffPoly hamiltonian_flow(const LocalFunctional& h);

/// Frechet derivative of phi applied to b: sum_k dphi/du_k * d^k b/dx^k.
DiffPoly frechet_apply(const DiffPoly& phi, const DiffPoly& b);

/// Substitutes u_k -> u_k + sum_{g=1..G} coeffs[g-1] h^g e^g u_{k+2g} into p
/// and truncates at hbar^G.
DiffPoly substitute_even_operator(const DiffPoly& p, const std::vector<Rational>& coeffs, int g_max);

/// Rewrites an expression in u in terms of w via
/// u = w + sum_g (-1)^g / (2^{2g} (2g+1)!) h^g e^g w_{2g}, truncated at hbar^G.
/// Both sides use the same symbol u_k for the dependent variable.
DiffPoly miura_forward(const DiffPoly& p, int g_max);
/// Compositional inverse of miura_forward up to hbar^G.
DiffPoly miura_inverse(const DiffPoly& p, int g_max);
/// Coefficients b_g of w = u + sum_g b_g h^g e^g u_{2g}, g = 1..G.
std::vector<Rational> miura_inverse_coeffs(int g_max);

/// Recovers h with hamiltonian_flow(h) = q. Throws std::domain_error when q
/// is not a total derivative or its antiderivative fails the Helmholtz test.
LocalFunctional reconstruct_functional_from_flow(const DiffPoly& q, int g_max,
                                                 std::uint64_t seed = 20150101);

/// Seeded random differential polynomial for property tests and Helmholtz
/// probes: up to `terms` monomials of u-degree <= max_degree, differential
/// degree <= max_diff, small integer-ratio coefficients with hbar/eps powers
/// <= max_hbar.
DiffPoly random_diffpoly(std::mt19937_64& rng, int terms, int max_degree, int max_diff, int max_hbar);

nlohmann::json to_json(const DiffPoly& p);
DiffPoly diffpoly_from_json(const nlohmann::json& j);

/// "u*u_1 + 1/12*h*u_3"
std::string pretty(const DiffPoly& p);
std::string latex(const DiffPoly& p);
std::string pretty(const UMonomial& m);

}  // namespace ilwhodge
