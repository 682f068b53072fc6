#pragma once
// Seeded single-case predicates shared by the property suite and the
// acceptance run. Each returns true when the identity holds for the inputs
// drawn from `seed`.
#include <algorithm>
#include <cstdint>
#include <random>

#include "ilwhodge/diffpoly.hpp"
#include "ilwhodge/series.hpp"

namespace props {

using namespace ilwhodge;

inline constexpr int kCases = 200;
inline constexpr std::uint64_t kBaseSeed = 20150101;

inline DiffPoly small(std::mt19937_64& rng) { return random_diffpoly(rng, 4, 3, 4, 2); }

inline MultiSeries random_series(std::mt19937_64& rng, const std::vector<VarSpec>& vars, bool zero_constant) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  MultiSeries s(vars);
  for (int t = 0; t < 6; ++t) {
    Exponents e;
    for (const auto& v : vars) e.push_back(static_cast<int>(rng() % v.order));
    if (zero_constant && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) continue;
    s.add_term(e, Rational(num(rng), den(rng)));
  }
  return s;
}

inline const std::vector<VarSpec>& series_vars() {
  static const std::vector<VarSpec> v{{"h", 5}, {"e", 4}};
  return v;
}

inline bool euler_kills_dx(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto p = random_diffpoly(rng, 5, 4, 5, 3);
  return variational_derivative(total_x_derivative(p)).is_zero();
}

inline bool dx_derivation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto p = small(rng), q = small(rng);
  return total_x_derivative(p * q) == total_x_derivative(p) * q + p * total_x_derivative(q) &&
         total_x_derivative(p + q) == total_x_derivative(p) + total_x_derivative(q);
}

inline bool bracket_antisymmetric(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto f = normalize(small(rng)), g = normalize(small(rng));
  return (poisson_bracket(f, g) + poisson_bracket(g, f)).is_zero();
}

struct JacobiOutcome {
  bool holds;
  bool nontrivial;  // the double bracket itself was nonzero
};

inline JacobiOutcome bracket_jacobi(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto f = normalize(random_diffpoly(rng, 5, 4, 4, 1));
  const auto g = normalize(random_diffpoly(rng, 5, 4, 4, 1));
  const auto h = normalize(random_diffpoly(rng, 5, 4, 4, 1));
  const auto fgh = poisson_bracket(poisson_bracket(f, g), h);
  const auto sum = fgh + poisson_bracket(poisson_bracket(g, h), f) + poisson_bracket(poisson_bracket(h, f), g);
  return {sum.is_zero(), !fgh.is_zero()};
}

inline bool miura_roundtrip(std::uint64_t seed, int order = 4) {
  std::mt19937_64 rng(seed);
  const auto p = random_diffpoly(rng, 3, 3, 3, 2);
  return miura_inverse(miura_forward(p, order), order) == p.truncate_hbar(order) &&
         miura_forward(miura_inverse(p, order), order) == p.truncate_hbar(order);
}

inline bool exp_log_inverse(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto one = MultiSeries::constant(series_vars(), 1);
  const auto a = random_series(rng, series_vars(), true);
  return log_series(exp_series(a)) == a && exp_series(log_series(one + a)) == one + a;
}

inline bool normalize_idempotent(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto p = random_diffpoly(rng, 5, 4, 6, 2);
  const auto n = normalize(p);
  return normalize(n.density()) == n && variational_derivative(p - n.density()).is_zero() &&
         normalize(p + total_x_derivative(small(rng))) == n;
}

inline bool series_ring_laws(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& vars = series_vars();
  const auto a = random_series(rng, vars, false);
  const auto b = random_series(rng, vars, false);
  const auto c = random_series(rng, vars, false);
  const auto da = partial_derivative(a, "h"), db = partial_derivative(b, "h");
  return a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
         partial_derivative(a * b, "h") == da * truncate(b, da.vars()) + truncate(a, da.vars()) * db;
}

}  // namespace props
