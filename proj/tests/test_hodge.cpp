#include <doctest.h>

#include "ilwhodge/exactnum.hpp"
#include "ilwhodge/hodge.hpp"
#include "oracles.hpp"

using namespace ilwhodge;
using namespace ilwhodge::hodge;

TEST_CASE("dimension_check") {
  CHECK(dimension_check(1, 1, 1, {0}));
  CHECK(dimension_check(1, 1, 0, {1}));
  CHECK_FALSE(dimension_check(1, 1, 0, {0}));
  CHECK_FALSE(dimension_check(0, 2, 0, {0, 0}));
  CHECK(dimension_check(0, 3, 0, {0, 0, 0}));
  CHECK_FALSE(dimension_check(1, 0, 0, {}));
}

TEST_CASE("BracketTable rejects invalid entries") {
  BracketTable t(Flavor::plain);
  CHECK_THROWS_AS(t.set(1, 2, {-1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(t.set(1, 0, {0}, 1), std::invalid_argument);
  t.set(1, 1, {0}, Rational(1, 24));
  CHECK(t.value(1, 1, {0}) == Rational(1, 24));
  CHECK(t.value(2, 0, {4}).is_zero());
}

TEST_CASE("one-point table: named values") {
  const auto t = one_point_table(2);
  CHECK(t.value(1, 1, {0}) == Rational(1, 24));
  CHECK(t.value(1, 0, {1}) == Rational(1, 24));
  CHECK(t.value(2, 2, {2}) == Rational(7, 5760));
  CHECK(t.value(2, 0, {4}) == Rational(1, 1152));
  CHECK(Rational(1, 2880) + Rational(1, 1152) == Rational(7, 5760));
  CHECK(one_point_series(2).constant_term() == Rational(1));
  CHECK_THROWS(one_point_table(0));
}

TEST_CASE("one-point table agrees with the brute-force expansion") {
  const int g_max = 6;
  const auto t = one_point_table(g_max);
  const auto bf = oracle::one_point_bruteforce(2 * g_max + 1, g_max);
  CHECK(bf[0][0] == Rational(1));
  for (int g = 1; g <= g_max; ++g) {
    for (int i = 0; i <= g; ++i) CHECK(t.value(g, g - i, {2 * g - 2 + i}) == bf[2 * g][i]);
    // the t^{2g} coefficient is a polynomial of degree g in k
    for (int i = g + 1; i <= g_max; ++i) CHECK(bf[2 * g][i].is_zero());
    for (int i = 0; i <= g_max; ++i) CHECK(bf[2 * g - 1][i].is_zero());
  }
  CHECK(t.entries().size() == static_cast<std::size_t>((g_max * (g_max + 3)) / 2));
}

TEST_CASE("S series") {
  const auto s = s_series(3);
  CHECK(s.coefficient({1, 0}) == Rational(1, 24));
  CHECK(s.coefficient({1, 1}) == Rational(1, 24));
  CHECK(s.coefficient({2, 0}) == Rational(1, 1152));
  // S(h, e) is the one-point series with t^2 = h e and k = 1/e
  const auto t = one_point_table(3);
  for (int g = 1; g <= 3; ++g)
    for (int j = 0; j <= g; ++j) CHECK(s.coefficient({g, j}) == t.value(g, j, {3 * g - 2 - j}));
}

TEST_CASE("S tilde series") {
  const auto st = s_tilde_series(8);
  CHECK(st.coefficient({1, 0}) == Rational(1, 24));
  CHECK(st.coefficient({2, 0}) == Rational(1, 1152));
  CHECK(st.coefficient({2, 1}) == Rational(1, 2880));
  for (const auto& [e, c] : st.terms()) CHECK(e[1] <= std::max(e[0] - 1, 0));
  CHECK(s_tilde_direct(8) == s_tilde_via_sine(8));
  CHECK(verify_s_tilde(6).ok());
}

TEST_CASE("padded tables") {
  const auto t = padded_table(s_tilde_series(3), Flavor::tilde, 3);
  CHECK(t.flavor() == Flavor::tilde);
  CHECK(t.value(0, 0, {0, 0, 0}) == Rational(1));
  CHECK(t.value(1, 0, {0, 0, 3}) == Rational(1, 24));
  CHECK(t.value(2, 1, {0, 0, 5}) == Rational(1, 2880));
}

TEST_CASE("constants from S tilde") {
  const auto cg = extract_cg(8);
  REQUIRE(cg.size() == 8);
  CHECK(cg[0] == Rational(1, 24));
  CHECK(cg[1] == Rational(1, 1440));
  for (int g = 1; g <= 8; ++g) CHECK(cg[g - 1] == c_g(g));
  CHECK(ode_residual(6).is_zero());
  CHECK_FALSE(ode_residual(6, CgTable().perturb(2, Rational(1, 1000000))).is_zero());
  CHECK(verify_cg(5).ok());
  const auto bad = verify_cg(5, CgTable().perturb(3, Rational(1, 1000000)));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.first_mismatch->term == "C_3");
}

TEST_CASE("linear-term identity") {
  // genus one, t_3 coefficient: (2g+1 - 1) <tau_0^2 tau_3>~_1 against 2 C_1 <tau_0^3>_0
  const Rational tilde_1 = s_tilde_series(1).coefficient({1, 0});
  CHECK((Rational(3) - Rational(1)) * tilde_1 == Rational(1, 12));
  CHECK(Rational(2) * c_g(1) * Rational(1) == Rational(1, 12));

  for (int g = 1; g <= 4; ++g) CHECK(verify_linear_term_identity(g).ok());
  const auto bad = verify_linear_term_identity(4, CgTable().perturb(1, Rational(1, 1000000)));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.first_mismatch->hbar_order == 1);
}

TEST_CASE("back from the constants") {
  CHECK(s_tilde_from_constants(6) == s_tilde_series(6));
  CHECK(verify_reverse(5).ok());
  CHECK_FALSE(verify_reverse(5, CgTable().perturb(2, Rational(1, 1000000))).ok());
}

TEST_CASE("rendering") {
  const auto t = one_point_table(1);
  CHECK(to_csv(t) == "g,j,d,value\n1,0,1,1/24\n1,1,0,1/24\n");
  const auto j = to_json(t);
  CHECK(j["flavor"] == "plain");
  CHECK(j["entries"][1]["value"] == "1/24");
  CHECK(j["entries"][1]["d"] == nlohmann::json::array({0}));
  CHECK(to_latex(t).find("\\frac{1}{24}") != std::string::npos);
  const auto p = padded_table(s_tilde_series(1), Flavor::tilde, 1);
  CHECK(to_csv(p).find("0,0,0;0;0,1") != std::string::npos);
}
