#include "ilwhodge/hodge.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace ilwhodge::hodge {

namespace {

void require_order(int genus_order, const char* who) {
  if (genus_order < 1) throw std::invalid_argument(std::string(who) + ": genus order must be >= 1");
}

std::string join(const std::vector<int>& d, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? std::string(1, sep) : "") << d[i];
  return os.str();
}

/// log((z/2)/sin(z/2)) with z^2 -> h e.
MultiSeries log_sinc_he(int genus_order) {
  const auto vars = hodge_vars(genus_order);
  return substitute_square(log_sinc_half(2 * genus_order + 2), vars[0], vars[1]);
}

/// First (h, e) coefficient where two series over the same variables differ.
std::optional<Mismatch> first_series_difference(const MultiSeries& expected, const MultiSeries& actual) {
  const MultiSeries diff = actual - expected;
  std::optional<Exponents> best;
  for (const auto& [e, c] : diff.terms()) {
    if (!best || e < *best) best = e;
  }
  if (!best) return std::nullopt;
  Mismatch mm;
  mm.hbar_order = (*best)[0];
  mm.term = "h^" + std::to_string((*best)[0]) + "*e^" + std::to_string((*best)[1]);
  mm.expected = expected.coefficient(*best);
  mm.actual = actual.coefficient(*best);
  return mm;
}

}  // namespace

bool dimension_check(int g, int n, int j, const std::vector<int>& d) {
  const int sum = std::accumulate(d.begin(), d.end(), 0);
  return 3 * g - 3 + n == j + sum && 2 * g - 2 + n > 0;
}

void BracketTable::set(int g, int j, std::vector<int> d, const Rational& value) {
  if (g < 0 || j < 0 || j > g) throw std::invalid_argument("BracketTable: lambda index outside [0, g]");
  if (!dimension_check(g, static_cast<int>(d.size()), j, d))
    throw std::invalid_argument("BracketTable: entry violates the dimension constraint");
  entries_[BracketKey{g, j, std::move(d)}] = value;
}

Rational BracketTable::value(int g, int j, const std::vector<int>& d) const {
  auto it = entries_.find(BracketKey{g, j, d});
  return it == entries_.end() ? Rational() : it->second;
}

MultiSeries one_point_series(int g_max) {
  if (g_max < 1) throw std::invalid_argument("one_point_series: g_max must be >= 1");
  const MultiSeries base = inverse(sinc_half(2 * g_max + 1, "t"));
  MultiSeries s = pow_linear_exponent(base, Rational(1), Rational(1), VarSpec{"k", g_max + 1});
  if (s.constant_term() != Rational(1)) throw std::logic_error("one_point_series: constant term is not 1");
  return s;
}

BracketTable one_point_table(int g_max) {
  const MultiSeries s = one_point_series(g_max);
  BracketTable table(Flavor::plain);
  for (int g = 1; g <= g_max; ++g) {
    for (int i = 0; i <= g; ++i) table.set(g, g - i, {2 * g - 2 + i}, s.coefficient({2 * g, i}));
  }
  return table;
}

std::vector<VarSpec> hodge_vars(int genus_order) {
  return {VarSpec{"h", genus_order + 1}, VarSpec{"e", genus_order + 2}};
}

MultiSeries s_series(int genus_order) {
  require_order(genus_order, "s_series");
  const MultiSeries l = log_sinc_he(genus_order);
  return exp_series(l + divide_by_var(l, "e", 1));
}

MultiSeries sine_factor(int genus_order) {
  const auto vars = hodge_vars(genus_order);
  return substitute_square(sinc_half(2 * genus_order + 2), vars[0], vars[1]);
}

MultiSeries s_tilde_via_sine(int genus_order) { return sine_factor(genus_order) * s_series(genus_order); }

MultiSeries s_tilde_direct(int genus_order) {
  require_order(genus_order, "s_tilde_direct");
  return exp_series(divide_by_var(log_sinc_he(genus_order), "e", 1));
}

MultiSeries s_tilde_series(int genus_order) {
  MultiSeries direct = s_tilde_direct(genus_order);
  if (!(direct == s_tilde_via_sine(genus_order)))
    throw std::logic_error("s_tilde_series: sine-factor and exponential routes disagree");
  return direct;
}

BracketTable padded_table(const MultiSeries& series, Flavor flavor, int genus_order) {
  BracketTable table(flavor);
  for (int g = 0; g <= genus_order; ++g) {
    for (int j = 0; j <= g; ++j) table.set(g, j, {0, 0, 3 * g - j}, series.coefficient({g, j}));
  }
  return table;
}

std::vector<Rational> extract_cg(int genus_order) {
  require_order(genus_order, "extract_cg");
  const MultiSeries st = s_tilde_series(genus_order);
  const MultiSeries d = partial_derivative(st, "h");
  const MultiSeries q = d * inverse(truncate(st, d.vars()));
  for (const auto& [e, c] : q.terms()) {
    if (e[0] != e[1])
      throw std::logic_error("extract_cg: d log S~/dh is not a function of h*e (term h^" + std::to_string(e[0]) +
                             " e^" + std::to_string(e[1]) + ")");
  }
  std::vector<Rational> out;
  for (int g = 1; g <= genus_order; ++g) out.push_back(q.coefficient({g - 1, g - 1}));
  return out;
}

MultiSeries ode_residual(int genus_order, const CgTable& cg) {
  const MultiSeries st = s_tilde_series(genus_order);
  const MultiSeries d = partial_derivative(st, "h");
  MultiSeries rate(d.vars());
  for (int g = 1; g <= genus_order; ++g) rate.add_term({g - 1, g - 1}, cg(g));
  return d - rate * truncate(st, d.vars());
}

MultiSeries s_tilde_from_constants(int genus_order, const CgTable& cg) {
  require_order(genus_order, "s_tilde_from_constants");
  const auto vars = hodge_vars(genus_order);
  const std::vector<VarSpec> evar{vars[1]};
  // by_order[n] is the hbar^n coefficient, a series in e.
  std::vector<MultiSeries> by_order{MultiSeries::constant(evar, Rational(1))};
  for (int n = 0; n < genus_order; ++n) {
    MultiSeries next(evar);
    for (int a = 0; a <= n; ++a) {
      next += MultiSeries::monomial(evar, {a}, cg(a + 1)) * by_order[n - a];
    }
    by_order.push_back(next * Rational(1, n + 1));
  }
  MultiSeries out(vars);
  for (int n = 0; n <= genus_order; ++n) {
    for (const auto& [e, c] : by_order[n].terms()) out.add_term({n, e[0]}, c);
  }
  return out;
}

VerificationReport verify_cg(int genus_order, const CgTable& cg) {
  VerificationReport r;
  r.name = "cg";
  r.order_checked = genus_order;
  const std::vector<Rational> extracted = extract_cg(genus_order);
  for (int g = 1; g <= genus_order; ++g) {
    const Rational expected = cg(g);
    const Rational& actual = extracted[g - 1];
    r.details.push_back({{"g", g}, {"extracted", actual.str()}, {"c_g", expected.str()}});
    if (!r.first_mismatch && actual != expected) {
      r.first_mismatch = Mismatch{g, "C_" + std::to_string(g), expected, actual, ""};
    }
  }
  return r;
}

VerificationReport verify_s_tilde(int genus_order) {
  VerificationReport r;
  r.name = "s-tilde";
  r.order_checked = genus_order;
  const MultiSeries direct = s_tilde_direct(genus_order);
  const MultiSeries via_sine = s_tilde_via_sine(genus_order);
  r.first_mismatch = first_series_difference(direct, via_sine);
  r.details.push_back({{"terms", direct.terms().size()}});
  return r;
}

VerificationReport verify_linear_term_identity(int genus_order, const CgTable& cg) {
  require_order(genus_order, "verify_linear_term_identity");
  VerificationReport r;
  r.name = "linear-term";
  r.order_checked = genus_order;

  const MultiSeries st = s_tilde_series(genus_order);
  // <lambda_j tau_0^2 tau_{3g-j}>~_g, with the genus-0 seed <tau_0^3>_0 = 1
  // coming from the t_0^2/2 term of the string equation.
  auto tilde = [&](int g, int j) -> Rational {
    if (g == 0) return j == 0 ? Rational(1) : Rational();
    return st.coefficient({g, j});
  };

  // Coefficient of h^g e^j t_d, keyed (g, j, d).
  using Key = std::tuple<int, int, int>;
  std::map<Key, Rational> left;
  std::map<Key, Rational> right;
  for (int g = 0; g <= genus_order; ++g) {
    for (int j = 0; j <= g; ++j) {
      const Key key{g, j, 3 * g - j};
      // dilaton: du/dt_1 picks up (2g+1) on the genus-g linear term
      left[key] += Rational(2 * g + 1) * tilde(g, j);
      // u u_x, using u_d|_{t=0} = delta_{d,1}
      right[key] += tilde(g, j);
    }
  }
  for (int g = 1; g <= genus_order; ++g) {
    for (int h = 0; g + h <= genus_order; ++h) {
      for (int j = 0; j <= h; ++j) {
        const int eps = g + j - 1;
        right[Key{g + h, eps, 3 * (g + h) - eps}] += Rational(2) * cg(g) * tilde(h, j);
      }
    }
  }
  std::set<Key> keys;
  for (const auto& [k, v] : left) keys.insert(k);
  for (const auto& [k, v] : right) keys.insert(k);
  for (const auto& key : keys) {
    const Rational lv = left.count(key) ? left.at(key) : Rational();
    const Rational rv = right.count(key) ? right.at(key) : Rational();
    if (lv != rv) {
      const auto& [g, j, d] = key;
      r.first_mismatch = Mismatch{g, "h^" + std::to_string(g) + "*e^" + std::to_string(j) + "*t_" + std::to_string(d),
                                  lv, rv, "left: (2g+1)-weighted dilaton side; right: u u_x + dispersive terms"};
      break;
    }
  }
  r.details.push_back({{"coefficients_compared", keys.size()}});
  return r;
}

VerificationReport verify_reverse(int genus_order, const CgTable& cg) {
  VerificationReport r;
  r.name = "reverse";
  r.order_checked = genus_order;
  const MultiSeries integrated = s_tilde_from_constants(genus_order, cg);
  r.first_mismatch = first_series_difference(s_tilde_series(genus_order), integrated);
  if (r.first_mismatch) {
    r.first_mismatch->note = "S~ integrated from C_g differs from the one-point series";
    return r;
  }
  const MultiSeries s = integrated * inverse(sine_factor(genus_order));
  const BracketTable table = one_point_table(genus_order);
  for (int g = 1; g <= genus_order && !r.first_mismatch; ++g) {
    for (int j = 0; j <= g; ++j) {
      const Rational expected = table.value(g, j, {3 * g - j - 2});
      const Rational actual = s.coefficient({g, j});
      if (expected != actual) {
        r.first_mismatch = Mismatch{g, "<lambda_" + std::to_string(j) + " tau_" + std::to_string(3 * g - j - 2) + ">_" +
                                           std::to_string(g),
                                    expected, actual, "re-derived one-point bracket"};
        break;
      }
    }
  }
  r.details.push_back({{"entries", table.entries().size()}});
  return r;
}

nlohmann::json to_json(const BracketTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, v] : t.entries()) rows.push_back({{"g", k.g}, {"j", k.j}, {"d", k.d}, {"value", v.str()}});
  return {{"flavor", t.flavor() == Flavor::plain ? "plain" : "tilde"}, {"entries", rows}};
}

std::string to_csv(const BracketTable& t) {
  std::ostringstream os;
  os << "g,j,d,value\n";
  for (const auto& [k, v] : t.entries()) os << k.g << ',' << k.j << ',' << join(k.d, ';') << ',' << v.str() << '\n';
  return os.str();
}

std::string to_latex(const BracketTable& t) {
  std::ostringstream os;
  os << "\\begin{tabular}{cccc}\n$g$ & $j$ & $d$ & value \\\\\n\\hline\n";
  for (const auto& [k, v] : t.entries()) {
    os << k.g << " & " << k.j << " & " << join(k.d, ',') << " & $";
    if (v.is_integer()) {
      os << v.str();
    } else {
      os << (v.sign() < 0 ? "-" : "") << "\\frac{" << v.abs().numerator().get_str() << "}{"
         << v.denominator().get_str() << "}";
    }
    os << "$ \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace ilwhodge::hodge
