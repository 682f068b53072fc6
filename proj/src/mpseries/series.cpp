#include "ilwhodge/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ilwhodge/exactnum.hpp"

namespace ilwhodge {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MultiSeries::MultiSeries(std::vector<VarSpec> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].order < 0) throw std::invalid_argument("MultiSeries: negative truncation order");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i].name == vars_[j].name)
        throw std::invalid_argument("MultiSeries: duplicate variable '" + vars_[i].name + "'");
    }
  }
}

MultiSeries MultiSeries::constant(std::vector<VarSpec> vars, const Rational& c) {
  MultiSeries s(std::move(vars));
  s.add_term(Exponents(s.vars_.size(), 0), c);
  return s;
}

MultiSeries MultiSeries::variable(std::vector<VarSpec> vars, std::string_view name) {
  MultiSeries s(std::move(vars));
  Exponents e(s.vars_.size(), 0);
  e[s.var_index(name)] = 1;
  s.add_term(e, Rational(1));
  return s;
}

MultiSeries MultiSeries::monomial(std::vector<VarSpec> vars, Exponents exps, const Rational& c) {
  MultiSeries s(std::move(vars));
  if (exps.size() != s.vars_.size()) throw std::invalid_argument("MultiSeries::monomial: arity");
  if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("MultiSeries::monomial: negative exponent");
  s.add_term(exps, c);
  return s;
}

std::size_t MultiSeries::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  throw std::invalid_argument("MultiSeries: unknown variable '" + std::string(name) + "'");
}

bool MultiSeries::has_var(std::string_view name) const {
  return std::any_of(vars_.begin(), vars_.end(), [&](const VarSpec& v) { return v.name == name; });
}

bool MultiSeries::within_bounds(const Exponents& exps) const {
  if (exps.size() != vars_.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] >= vars_[i].order) return false;
  }
  return true;
}

Rational MultiSeries::coefficient(const Exponents& exps) const {
  if (!within_bounds(exps)) throw std::out_of_range("MultiSeries::coefficient: exponent out of range");
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational() : it->second;
}

Rational MultiSeries::constant_term() const {
  if (terms_.empty()) return Rational();
  const auto& [e, c] = *terms_.begin();
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }) ? c : Rational();
}

void MultiSeries::add_term(const Exponents& exps, const Rational& c) {
  if (c.is_zero() || !within_bounds(exps)) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiSeries::require_same_vars(const MultiSeries& o, const char* op) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument(std::string("MultiSeries::") + op + ": mismatched variable sets");
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  require_same_vars(o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  require_same_vars(o, "sub");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.require_same_vars(b, "mul");
  MultiSeries r(a.vars_);
  const std::size_t n = a.vars_.size();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool keep = true;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] >= a.vars_[i].order) {
          keep = false;
          break;
        }
      }
      if (keep) r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiSeries add(const MultiSeries& a, const MultiSeries& b) { return a + b; }
MultiSeries mul(const MultiSeries& a, const MultiSeries& b) { return a * b; }

MultiSeries exp_series(const MultiSeries& a) {
  if (!a.constant_term().is_zero()) throw std::domain_error("exp_series: constant term must be 0");
  MultiSeries result = MultiSeries::constant(a.vars(), Rational(1));
  MultiSeries power = result;
  // a^n vanishes once n exceeds the largest retained total degree.
  for (long n = 1; !power.is_zero(); ++n) {
    power = power * a;
    power *= Rational(1, n);
    result += power;
  }
  return result;
}

MultiSeries log_series(const MultiSeries& a) {
  if (a.constant_term() != Rational(1)) throw std::domain_error("log_series: constant term must be 1");
  const MultiSeries x = a - MultiSeries::constant(a.vars(), Rational(1));
  MultiSeries result(a.vars());
  MultiSeries power = MultiSeries::constant(a.vars(), Rational(1));
  for (long n = 1;; ++n) {
    power = power * x;
    if (power.is_zero()) break;
    result += power * Rational(n % 2 == 1 ? 1 : -1, n);
  }
  return result;
}

MultiSeries inverse(const MultiSeries& a) {
  const Rational c0 = a.constant_term();
  if (c0.is_zero()) throw std::domain_error("inverse: constant term must be nonzero");
  // 1/a = (1/c0) * sum_n (-x)^n with x = a/c0 - 1.
  const MultiSeries one = MultiSeries::constant(a.vars(), Rational(1));
  const MultiSeries x = a * c0.reciprocal() - one;
  MultiSeries result = one;
  MultiSeries power = one;
  for (;;) {
    power = -(power * x);
    if (power.is_zero()) break;
    result += power;
  }
  return result * c0.reciprocal();
}

MultiSeries partial_derivative(const MultiSeries& a, std::string_view v) {
  const std::size_t idx = a.var_index(v);
  std::vector<VarSpec> vars = a.vars();
  vars[idx].order = std::max(0, vars[idx].order - 1);
  MultiSeries r(std::move(vars));
  for (const auto& [e, c] : a.terms()) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] -= 1;
    r.add_term(d, c * Rational(e[idx]));
  }
  return r;
}

MultiSeries divide_by_var(const MultiSeries& a, std::string_view v, int m) {
  if (m < 1) throw std::invalid_argument("divide_by_var: m must be positive");
  const std::size_t idx = a.var_index(v);
  MultiSeries r(a.vars());
  for (const auto& [e, c] : a.terms()) {
    if (e[idx] < m)
      throw std::domain_error("divide_by_var: term not divisible by " + std::string(v) + "^" +
                              std::to_string(m));
    Exponents d = e;
    d[idx] -= m;
    r.add_term(d, c);
  }
  return r;
}

MultiSeries truncate(const MultiSeries& a, const std::vector<VarSpec>& vars) {
  if (vars.size() != a.vars().size()) throw std::invalid_argument("truncate: arity mismatch");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name != a.vars()[i].name || vars[i].order > a.vars()[i].order)
      throw std::invalid_argument("truncate: bounds may only tighten on the same variables");
  }
  MultiSeries r(vars);
  for (const auto& [e, c] : a.terms()) r.add_term(e, c);
  return r;
}

MultiSeries extend_vars(const MultiSeries& a, const VarSpec& v) {
  std::vector<VarSpec> vars = a.vars();
  vars.push_back(v);
  MultiSeries r(std::move(vars));
  for (const auto& [e, c] : a.terms()) {
    Exponents d = e;
    d.push_back(0);
    r.add_term(d, c);
  }
  return r;
}

MultiSeries substitute_square(const MultiSeries& a, const VarSpec& hbar, const VarSpec& eps) {
  if (a.vars().size() != 1) throw std::invalid_argument("substitute_square: expected a univariate series");
  MultiSeries r({hbar, eps});
  for (const auto& [e, c] : a.terms()) {
    if (e[0] % 2 != 0) throw std::domain_error("substitute_square: series is not even");
    const int m = e[0] / 2;
    r.add_term({m, m}, c);
  }
  return r;
}

MultiSeries log_sinc_half(int order, std::string_view var) {
  if (order < 2) throw std::invalid_argument("log_sinc_half: order must be >= 2");
  MultiSeries r({VarSpec{std::string(var), order}});
  for (int g = 1; 2 * g < order; ++g) {
    const auto n = static_cast<unsigned>(2 * g);
    r.add_term({2 * g}, bernoulli(n).abs() / (Rational(2 * g) * Rational(factorial(n))));
  }
  return r;
}

MultiSeries sinc_half(int order, std::string_view var) {
  if (order < 1) throw std::invalid_argument("sinc_half: order must be >= 1");
  MultiSeries r({VarSpec{std::string(var), order}});
  r.add_term({0}, Rational(1));
  for (int m = 1; 2 * m < order; ++m) r.add_term({2 * m}, miura_coeff(m));
  return r;
}

MultiSeries pow_linear_exponent(const MultiSeries& base, const Rational& a0, const Rational& a1,
                                const VarSpec& k) {
  if (base.constant_term() != Rational(1))
    throw std::domain_error("pow_linear_exponent: base must have constant term 1");
  const MultiSeries log_base = extend_vars(log_series(base), k);
  const auto& vars = log_base.vars();
  const MultiSeries exponent =
      MultiSeries::constant(vars, a0) + MultiSeries::variable(vars, k.name) * a1;
  return exp_series(exponent * log_base);
}

nlohmann::json to_json(const MultiSeries& s) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : s.vars()) vars.push_back({{"name", v.name}, {"order", v.order}});
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"coef", c.str()}});
  return {{"vars", vars}, {"terms", terms}};
}

MultiSeries series_from_json(const nlohmann::json& j) {
  std::vector<VarSpec> vars;
  for (const auto& v : j.at("vars")) vars.push_back({v.at("name").get<std::string>(), v.at("order").get<int>()});
  MultiSeries s(std::move(vars));
  for (const auto& t : j.at("terms")) {
    Exponents e = t.at("exp").get<Exponents>();
    if (!s.within_bounds(e)) throw std::invalid_argument("series_from_json: term outside bounds");
    s.add_term(e, Rational::parse(t.at("coef").get<std::string>()));
  }
  return s;
}

std::string pretty(const MultiSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rational coef = c;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      coef = coef.abs();
    }
    first = false;
    const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool need_star = false;
    if (is_const || coef != Rational(1)) {
      if (coef == Rational(-1) && !is_const) {
        os << "-";
      } else {
        os << coef.str();
        need_star = true;
      }
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << s.vars()[i].name;
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace ilwhodge
