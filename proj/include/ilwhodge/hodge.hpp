#pragma once

// One-point linear Hodge integrals and the series S, S~ built from them,
// through to the constants C_g.

#include <compare>
#include <map>
#include <vector>

#include <json.hpp>

#include "ilwhodge/exactnum.hpp"
#include "ilwhodge/report.hpp"
#include "ilwhodge/series.hpp"

namespace ilwhodge::hodge {

enum class Flavor { plain, tilde };

struct BracketKey {
  int g = 0;
  int j = 0;
  std::vector<int> d;  // tau indices

  friend auto operator<=>(const BracketKey&, const BracketKey&) = default;
};

/// True iff 3g - 3 + n = j + sum d_i and the moduli space is stable.
bool dimension_check(int g, int n, int j, const std::vector<int>& d);

/// Finite table of brackets <lambda_j tau_d1 ... tau_dn>_g.
class BracketTable {
 public:
  explicit BracketTable(Flavor flavor) : flavor_(flavor) {}

  Flavor flavor() const { return flavor_; }
  /// Rejects j > g and entries violating the dimension constraint.
  void set(int g, int j, std::vector<int> d, const Rational& value);
  /// Value of a bracket; zero when absent.
  Rational value(int g, int j, const std::vector<int>& d) const;
  const std::map<BracketKey, Rational>& entries() const { return entries_; }

 private:
  Flavor flavor_;
  std::map<BracketKey, Rational> entries_;
};

/// (t/2 / sin(t/2))^{k+1} in t (order 2 g_max + 1) and k (order g_max + 1).
MultiSeries one_point_series(int g_max);

/// <lambda_{g-i} tau_{2g-2+i}>_g for 1 <= g <= g_max, 0 <= i <= g.
BracketTable one_point_table(int g_max);

/// Variables (h, e) used for S and S~ at hbar-order G: h < G+1, e < G+2.
std::vector<VarSpec> hodge_vars(int genus_order);

/// S(h, e) = exp((1 + 1/e) L(h e)), L = log((z/2)/sin(z/2)).
MultiSeries s_series(int genus_order);

/// sin(sqrt(h e)/2) / (sqrt(h e)/2) in the hodge variables.
MultiSeries sine_factor(int genus_order);

/// S~ as the sine factor times S.
MultiSeries s_tilde_via_sine(int genus_order);
/// S~ = exp(sum_g h^g e^{g-1} |B_2g| / (2g (2g)!)).
MultiSeries s_tilde_direct(int genus_order);
/// Both routes; throws std::logic_error if they disagree.
MultiSeries s_tilde_series(int genus_order);

/// <lambda_j tau_0^2 tau_{3g-j}>_g (plain from S, tilde from S~), 0 <= g <= G.
BracketTable padded_table(const MultiSeries& series, Flavor flavor, int genus_order);

/// C_1..C_G (element g-1 is C_g) read off (d S~/dh) / S~. Throws
/// std::logic_error if the quotient is not a function of h e alone.
std::vector<Rational> extract_cg(int genus_order);

/// d S~/dh - (sum_g C_g (h e)^{g-1}) S~ up to the order where it is exact.
MultiSeries ode_residual(int genus_order, const CgTable& cg = {});

/// Integrates dS~/dh = (sum C_g (h e)^{g-1}) S~ order by order from S~(0) = 1.
MultiSeries s_tilde_from_constants(int genus_order, const CgTable& cg = {});

VerificationReport verify_cg(int genus_order, const CgTable& cg = {});
VerificationReport verify_s_tilde(int genus_order);
VerificationReport verify_linear_term_identity(int genus_order, const CgTable& cg = {});
/// From the constants back to the one-point table via the ODE and the sine factor.
VerificationReport verify_reverse(int genus_order, const CgTable& cg = {});

nlohmann::json to_json(const BracketTable& t);
/// CSV with header "g,j,d,value"; tau indices of multi-point keys joined by ';'.
std::string to_csv(const BracketTable& t);
std::string to_latex(const BracketTable& t);

}  // namespace ilwhodge::hodge
