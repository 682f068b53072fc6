#include "ilwhodge/diffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ilwhodge {

// ---------------------------------------------------------------- UMonomial

UMonomial::UMonomial(std::vector<int> mult) : mult_(std::move(mult)) {
  if (std::any_of(mult_.begin(), mult_.end(), [](int m) { return m < 0; }))
    throw std::invalid_argument("UMonomial: negative multiplicity");
  trim();
}

UMonomial UMonomial::from_indices(const std::vector<int>& indices) {
  std::vector<int> mult;
  for (int k : indices) {
    if (k < 0) throw std::invalid_argument("UMonomial: negative derivative index");
    if (k >= static_cast<int>(mult.size())) mult.resize(k + 1, 0);
    ++mult[k];
  }
  return UMonomial(std::move(mult));
}

void UMonomial::trim() {
  while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
}

int UMonomial::degree() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

int UMonomial::diff_degree() const {
  int d = 0;
  for (std::size_t k = 0; k < mult_.size(); ++k) d += static_cast<int>(k) * mult_[k];
  return d;
}

UMonomial UMonomial::times(const UMonomial& o) const {
  std::vector<int> m(std::max(mult_.size(), o.mult_.size()), 0);
  for (std::size_t k = 0; k < mult_.size(); ++k) m[k] += mult_[k];
  for (std::size_t k = 0; k < o.mult_.size(); ++k) m[k] += o.mult_[k];
  return UMonomial(std::move(m));
}

UMonomial UMonomial::with(int k, int delta) const {
  std::vector<int> m = mult_;
  if (k >= static_cast<int>(m.size())) m.resize(k + 1, 0);
  m[k] += delta;
  if (m[k] < 0) throw std::logic_error("UMonomial::with: negative multiplicity");
  return UMonomial(std::move(m));
}

bool UMonomial::is_normal() const {
  if (mult_.size() <= 1) return true;
  return mult_.back() >= 2;
}

std::vector<std::pair<int, int>> UMonomial::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < mult_.size(); ++k) {
    if (mult_[k] > 0) out.emplace_back(static_cast<int>(k), mult_[k]);
  }
  return out;
}

bool UMonomialOrder::operator()(const UMonomial& a, const UMonomial& b) const {
  const int da = a.diff_degree();
  const int db = b.diff_degree();
  if (da != db) return da < db;
  return a.mult() < b.mult();
}

// ---------------------------------------------------------------- DiffPoly

const std::vector<VarSpec>& DiffPoly::coeff_vars() {
  static const std::vector<VarSpec> vars{{"h", kCoeffOrder}, {"e", kCoeffOrder}};
  return vars;
}

DiffPoly::Coeff DiffPoly::coeff(const Rational& c, int h, int e) {
  return MultiSeries::monomial(coeff_vars(), {h, e}, c);
}

DiffPoly DiffPoly::constant(const Rational& c) { return term(c, 0, 0, UMonomial()); }

DiffPoly DiffPoly::u(int k) { return term(Rational(1), 0, 0, UMonomial::from_indices({k})); }

DiffPoly DiffPoly::term(const Rational& c, int h, int e, const UMonomial& m) {
  return term(coeff(c, h, e), m);
}

DiffPoly DiffPoly::term(const Coeff& c, const UMonomial& m) {
  DiffPoly p;
  p.add_term(m, c);
  return p;
}

void DiffPoly::add_term(const UMonomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly::Coeff DiffPoly::coefficient(const UMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(coeff_vars()) : it->second;
}

Rational DiffPoly::coefficient(const UMonomial& m, int h, int e) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second.coefficient({h, e});
}

int DiffPoly::max_derivative() const {
  int top = -1;
  for (const auto& [m, c] : terms_) top = std::max(top, m.top());
  return top;
}

int DiffPoly::max_hbar() const {
  int top = -1;
  for (const auto& [m, c] : terms_) {
    for (const auto& [e, v] : c.terms()) top = std::max(top, e[0]);
  }
  return top;
}

DiffPoly DiffPoly::truncate_hbar(int g_max) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    Coeff kept(coeff_vars());
    for (const auto& [e, v] : c.terms()) {
      if (e[0] <= g_max) kept.add_term(e, v);
    }
    r.add_term(m, kept);
  }
  return r;
}

DiffPoly DiffPoly::hbar_part(int g) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    Coeff kept(coeff_vars());
    for (const auto& [e, v] : c.terms()) {
      if (e[0] == g) kept.add_term(e, v);
    }
    r.add_term(m, kept);
  }
  return r;
}

DiffPoly DiffPoly::partial_u(int k) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    const int mult = m.multiplicity(k);
    if (mult == 0) continue;
    r.add_term(m.with(k, -1), c * Rational(mult));
  }
  return r;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Coeff& c) {
  TermMap out;
  for (auto& [m, v] : terms_) {
    Coeff prod = v * c;
    if (!prod.is_zero()) out.emplace(m, std::move(prod));
  }
  terms_ = std::move(out);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
  }
  return r;
}

// ---------------------------------------------------------------- calculus

DiffPoly total_x_derivative(const DiffPoly& p) {
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [k, mult] : m.pairs()) {
      r.add_term(m.with(k, -1).with(k + 1, 1), c * Rational(mult));
    }
  }
  return r;
}

DiffPoly total_x_derivative(const DiffPoly& p, int times) {
  DiffPoly r = p;
  for (int i = 0; i < times; ++i) r = total_x_derivative(r);
  return r;
}

IntegratedDensity integrate_by_parts(const DiffPoly& p) {
  IntegratedDensity out;
  DiffPoly work = p;
  // Every reduction strictly lowers the top derivative index, so the loop
  // runs at most max_derivative() rounds.
  while (!work.is_zero()) {
    DiffPoly next;
    for (const auto& [m, c] : work.terms()) {
      if (m.is_normal()) {
        out.normal.add_term(m, c);
        continue;
      }
      const int n = m.top();
      const UMonomial q = m.with(n, -1);
      if (q.is_constant()) {
        // c u_n = d/dx (c u_{n-1})
        out.antiderivative.add_term(UMonomial::from_indices({n - 1}), c);
        continue;
      }
      const int below = n - 1;
      const int mb = q.multiplicity(below);
      if (mb > 0) {
        // R u_{n-1}^k u_n = d/dx(R u_{n-1}^{k+1})/(k+1) - (d/dx R) u_{n-1}^{k+1}/(k+1)
        const UMonomial r = q.with(below, -mb);
        const UMonomial lifted = UMonomial().with(below, mb + 1);
        const Rational w(1, mb + 1);
        out.antiderivative.add_term(r.times(lifted), c * w);
        const DiffPoly dr = total_x_derivative(DiffPoly::term(c * (-w), r));
        next += dr * DiffPoly::term(Rational(1), 0, 0, lifted);
      } else {
        // Q u_n = d/dx(Q u_{n-1}) - (d/dx Q) u_{n-1}
        out.antiderivative.add_term(q.with(below, 1), c);
        const DiffPoly dq = total_x_derivative(DiffPoly::term(-c, q));
        next += dq * DiffPoly::u(below);
      }
    }
    work = std::move(next);
  }
  return out;
}

LocalFunctional normalize(const DiffPoly& p) { return LocalFunctional(integrate_by_parts(p).normal); }

LocalFunctional LocalFunctional::truncate_hbar(int g_max) const {
  return LocalFunctional(density_.truncate_hbar(g_max));
}

LocalFunctional operator+(const LocalFunctional& a, const LocalFunctional& b) {
  return LocalFunctional(a.density_ + b.density_);
}

LocalFunctional operator-(const LocalFunctional& a, const LocalFunctional& b) {
  return LocalFunctional(a.density_ - b.density_);
}

LocalFunctional operator*(const LocalFunctional& a, const Rational& c) {
  return LocalFunctional(a.density_ * c);
}

DiffPoly variational_derivative(const DiffPoly& density) {
  const int top = density.max_derivative();
  if (top < 0) return {};
  // Horner form of sum_k (-d/dx)^k df/du_k.
  DiffPoly acc = density.partial_u(top);
  for (int k = top - 1; k >= 0; --k) acc = density.partial_u(k) - total_x_derivative(acc);
  return acc;
}

DiffPoly variational_derivative(const LocalFunctional& h) { return variational_derivative(h.density()); }

LocalFunctional poisson_bracket(const LocalFunctional& h, const LocalFunctional& f) {
  return normalize(variational_derivative(h) * total_x_derivative(variational_derivative(f)));
}

DiffPoly hamiltonian_flow(const LocalFunctional& h) { return total_x_derivative(variational_derivative(h)); }

DiffPoly frechet_apply(const DiffPoly& phi, const DiffPoly& b) {
  DiffPoly r;
  DiffPoly db = b;
  const int top = phi.max_derivative();
  for (int k = 0; k <= top; ++k) {
    if (k > 0) db = total_x_derivative(db);
    r += phi.partial_u(k) * db;
  }
  return r;
}

// ---------------------------------------------------------------- random

DiffPoly random_diffpoly(std::mt19937_64& rng, int terms, int max_degree, int max_diff, int max_hbar) {
  std::uniform_int_distribution<int> n_terms(1, std::max(1, terms));
  std::uniform_int_distribution<int> degree(1, std::max(1, max_degree));
  std::uniform_int_distribution<int> index(0, std::max(0, max_diff));
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> hpow(0, std::max(0, max_hbar));
  DiffPoly p;
  const int count = n_terms(rng);
  for (int t = 0; t < count; ++t) {
    const int n = degree(rng);
    std::vector<int> idx;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      int k = index(rng);
      if (total + k > max_diff) k = 0;
      total += k;
      idx.push_back(k);
    }
    int a = num(rng);
    if (a == 0) a = 1;
    const int h = hpow(rng);
    const int e = std::uniform_int_distribution<int>(0, h)(rng);
    p += DiffPoly::term(Rational(a, den(rng)), h, e, UMonomial::from_indices(idx));
  }
  return p;
}

// ---------------------------------------------------------------- output

nlohmann::json to_json(const DiffPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json u = nlohmann::json::array();
    for (const auto& [k, mult] : m.pairs()) u.push_back({k, mult});
    out.push_back({{"coef", to_json(c)}, {"u", u}});
  }
  return out;
}

DiffPoly diffpoly_from_json(const nlohmann::json& j) {
  DiffPoly p;
  for (const auto& t : j) {
    std::vector<int> mult;
    for (const auto& pair : t.at("u")) {
      const int k = pair.at(0).get<int>();
      const int m = pair.at(1).get<int>();
      if (k < 0 || m <= 0) throw std::invalid_argument("diffpoly_from_json: bad (k, mult) pair");
      if (k >= static_cast<int>(mult.size())) mult.resize(k + 1, 0);
      mult[k] += m;
    }
    MultiSeries c = series_from_json(t.at("coef"));
    if (c.vars() != DiffPoly::coeff_vars()) c = truncate(c, DiffPoly::coeff_vars());
    p.add_term(UMonomial(std::move(mult)), c);
  }
  return p;
}

std::string pretty(const UMonomial& m) {
  if (m.is_constant()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, mult] : m.pairs()) {
    if (!first) os << "*";
    first = false;
    os << (k == 0 ? std::string("u") : "u_" + std::to_string(k));
    if (mult > 1) os << "^" << mult;
  }
  return os.str();
}

namespace {

struct FlatTerm {
  Rational coef;
  int h;
  int e;
  const UMonomial* mono;
};

std::vector<FlatTerm> flatten(const DiffPoly& p) {
  std::vector<FlatTerm> out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [e, v] : c.terms()) out.push_back({v, e[0], e[1], &m});
  }
  return out;
}

std::string latex_monomial(const UMonomial& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, mult] : m.pairs()) {
    if (!first) os << " ";
    first = false;
    os << (k == 0 ? std::string("u") : "u_{" + std::to_string(k) + "}");
    if (mult > 1) os << "^{" << mult << "}";
  }
  return os.str();
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

}  // namespace

std::string pretty(const DiffPoly& p) {
  const auto flat = flatten(p);
  if (flat.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : flat) {
    Rational coef = t.coef;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      coef = coef.abs();
    }
    first = false;
    std::vector<std::string> factors;
    if (t.h > 0) factors.push_back(t.h == 1 ? "h" : "h^" + std::to_string(t.h));
    if (t.e > 0) factors.push_back(t.e == 1 ? "e" : "e^" + std::to_string(t.e));
    if (!t.mono->is_constant()) factors.push_back(pretty(*t.mono));
    if (factors.empty()) {
      os << coef.str();
      continue;
    }
    if (coef == Rational(-1)) {
      os << "-";
    } else if (coef != Rational(1)) {
      os << coef.str() << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::string latex(const DiffPoly& p) {
  const auto flat = flatten(p);
  if (flat.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : flat) {
    Rational coef = t.coef;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      coef = coef.abs();
    } else if (coef.sign() < 0) {
      os << "-";
      coef = coef.abs();
    }
    first = false;
    std::vector<std::string> factors;
    if (t.h > 0) factors.push_back(t.h == 1 ? "\\hbar" : "\\hbar^{" + std::to_string(t.h) + "}");
    if (t.e > 0) factors.push_back(t.e == 1 ? "\\varepsilon" : "\\varepsilon^{" + std::to_string(t.e) + "}");
    if (!t.mono->is_constant()) factors.push_back(latex_monomial(*t.mono));
    if (factors.empty() || coef != Rational(1)) factors.insert(factors.begin(), latex_rational(coef));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << factors[i];
  }
  return os.str();
}

}  // namespace ilwhodge
