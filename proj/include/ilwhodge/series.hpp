#pragma once

// Truncated multivariate formal power series over Rational.
//
// Each variable carries an exclusive truncation bound: a term is kept only if
// every exponent is strictly below its variable's order. Terms are stored in
// graded-lexicographic order of their exponent vectors, zero coefficients are
// never stored, and the zero series is the empty term map.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ilwhodge/rational.hpp"

namespace ilwhodge {

struct VarSpec {
  std::string name;
  int order = 0;  // exclusive bound on retained exponents

  friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

using Exponents = std::vector<int>;

/// Total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiSeries {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  MultiSeries() = default;
  explicit MultiSeries(std::vector<VarSpec> vars);

  static MultiSeries constant(std::vector<VarSpec> vars, const Rational& c);
  static MultiSeries variable(std::vector<VarSpec> vars, std::string_view name);
  static MultiSeries monomial(std::vector<VarSpec> vars, Exponents exps, const Rational& c);

  const std::vector<VarSpec>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t var_index(std::string_view name) const;
  bool has_var(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool within_bounds(const Exponents& exps) const;

  /// Coefficient of the given monomial; 0 if absent. Throws std::out_of_range
  /// for an exponent vector of the wrong length or outside the bounds.
  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;

  /// Accumulates c into the coefficient of exps; silently drops terms beyond
  /// the truncation bounds.
  void add_term(const Exponents& exps, const Rational& c);

  MultiSeries operator-() const;
  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& c);

  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(MultiSeries a, const Rational& c) { return a *= c; }
  friend MultiSeries operator*(const Rational& c, MultiSeries a) { return a *= c; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_vars(const MultiSeries& o, const char* op) const;

  std::vector<VarSpec> vars_;
  TermMap terms_;
};

MultiSeries add(const MultiSeries& a, const MultiSeries& b);
MultiSeries mul(const MultiSeries& a, const MultiSeries& b);

/// exp(a); requires a zero constant term.
MultiSeries exp_series(const MultiSeries& a);
/// log(a); requires constant term 1.
MultiSeries log_series(const MultiSeries& a);
/// 1/a; requires a nonzero constant term.
MultiSeries inverse(const MultiSeries& a);

/// d/dv. The derivative of a series known modulo v^N is known modulo v^{N-1},
/// so the result's bound for v is one less than the input's.
MultiSeries partial_derivative(const MultiSeries& a, std::string_view v);

/// Shifts every v-exponent down by m; each term must have v-exponent >= m.
MultiSeries divide_by_var(const MultiSeries& a, std::string_view v, int m);

/// Re-expresses a over a copy of its variables with tighter (or equal) bounds.
MultiSeries truncate(const MultiSeries& a, const std::vector<VarSpec>& vars);

/// Appends a new variable (exponent 0 for all existing terms).
MultiSeries extend_vars(const MultiSeries& a, const VarSpec& v);

/// For an even univariate series in z, replaces z^{2m} by hbar^m eps^m.
MultiSeries substitute_square(const MultiSeries& a, const VarSpec& hbar, const VarSpec& eps);

/// sum_{g>=1} |B_{2g}| / (2g (2g)!) z^{2g} = log((z/2) / sin(z/2)), z-order `order`.
MultiSeries log_sinc_half(int order, std::string_view var = "z");

/// sin(z/2) / (z/2) = sum_m (-1)^m z^{2m} / (4^m (2m+1)!), z-order `order`.
MultiSeries sinc_half(int order, std::string_view var = "z");

/// base^(a0 + a1 k) = exp((a0 + a1 k) log(base)), with k appended to the
/// variables. base must have constant term 1.
MultiSeries pow_linear_exponent(const MultiSeries& base, const Rational& a0, const Rational& a1,
                                const VarSpec& k);

nlohmann::json to_json(const MultiSeries& s);
MultiSeries series_from_json(const nlohmann::json& j);

/// Human-readable form, e.g. "1 + 1/24*t^2".
std::string pretty(const MultiSeries& s);

}  // namespace ilwhodge
