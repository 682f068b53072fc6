// One line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ilwhodge/cli.hpp"
#include "ilwhodge/hodge.hpp"
#include "ilwhodge/ilw.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace ilwhodge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

// |B_2g| / (2g)! from the test-side Bernoulli oracle.
Rational dispersion_oracle(int g) { return oracle::bernoulli_at(2 * g).abs() / oracle::fact(2 * g); }

DiffPoly mono(const Rational& c, int h, int e, std::vector<int> idx) {
  return DiffPoly::term(c, h, e, UMonomial::from_indices(idx));
}

int cli_exit(std::vector<std::string> args, nlohmann::json* parsed = nullptr) {
  args.insert(args.begin(), "ilwhodge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (parsed) *parsed = nlohmann::json::parse(out.str(), nullptr, false);
  return code;
}

Outcome criterion_1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto cg = hodge::extract_cg(8);
  const double dt = seconds_since(t0);
  if (cg.size() != 8) o.fail("wrong length");
  for (int g = 1; g <= 8 && o.pass; ++g) {
    const Rational expected = dispersion_oracle(g) / Rational(2);
    if (cg[g - 1] != expected) o.fail("C_" + std::to_string(g) + " = " + cg[g - 1].str() + ", want " + expected.str());
  }
  if (o.pass && (cg[0] != Rational(1, 24) || cg[1] != Rational(1, 1440) || cg[2] != Rational(1, 60480)))
    o.fail("leading constants");
  if (dt >= 10.0) o.fail("took " + std::to_string(dt) + " s");
  if (o.pass) o.note = "C_1..C_8 exact in " + std::to_string(dt) + " s";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const int G = 5;
  DiffPoly expected = mono(1, 0, 0, {0, 1});
  for (int g = 1; g <= G; ++g) expected += mono(dispersion_oracle(g), g, g - 1, {2 * g + 1});
  const DiffPoly actual = ilw::flow(ilw::h1(G));
  if (actual != expected) o.fail("flow differs: " + pretty(actual));
  if (actual.coefficient(UMonomial::from_indices({3}), 1, 0) != Rational(1, 12)) o.fail("h u_3 coefficient");
  if (actual.coefficient(UMonomial::from_indices({5}), 2, 1) != Rational(1, 720)) o.fail("h^2 e u_5 coefficient");
  if (o.pass) o.note = "flow of h1 exact to hbar^5";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const int G = 3;
  // u^2 u_x / 2 + sum_g d_g h^g e^{g-1}/4 (2 (u u_2g)_x + d^{2g+1}(u^2)) + sum_{g>=2} d_g (g+1) h^g e^{g-2} u_{2g+1}
  DiffPoly expected = mono(Rational(1, 2), 0, 0, {0, 0, 1});
  for (int g = 1; g <= G; ++g) {
    const Rational d = dispersion_oracle(g);
    const int n = 2 * g + 1;
    DiffPoly inner = mono(2, 0, 0, {1, 2 * g}) + mono(2, 0, 0, {0, n});
    Rational binom(1);
    for (int k = 0; k <= n; ++k) {
      inner += mono(binom, 0, 0, {k, n - k});
      binom = binom * Rational(n - k) / Rational(k + 1);
    }
    expected += inner * DiffPoly::coeff(d / Rational(4), g, g - 1);
    if (g >= 2) expected += mono(d * Rational(g + 1), g, g - 2, {n});
  }
  const DiffPoly actual = ilw::flow(ilw::higher_hamiltonian(2, G));
  if (actual != expected) o.fail("second flow differs");
  const DiffPoly part1 = mono(Rational(1, 6), 1, 0, {1, 2}) + mono(Rational(1, 12), 1, 0, {0, 3});
  if (actual.hbar_part(1) != part1) o.fail("hbar^1 part");
  if (actual.coefficient(UMonomial::from_indices({5}), 2, 0) != Rational(1, 240)) o.fail("hbar^2 u_5 coefficient");

  const auto t0 = Clock::now();
  const int code = cli_exit({"verify", "ilw-t2", "--genus", "3"});
  const double dt = seconds_since(t0);
  if (code != 0) o.fail("verify ilw-t2 exited " + std::to_string(code));
  if (dt >= 60.0) o.fail("verify ilw-t2 took " + std::to_string(dt) + " s");
  if (o.pass) o.note = "t2 flow exact to hbar^3; CLI verify in " + std::to_string(dt) + " s";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto r21 = ilw::verify_commutation(2, 1, 3);
  const auto r32 = ilw::verify_commutation(3, 2, 2);
  if (!r21.ok()) o.fail("{h2,h1} != 0: " + r21.to_json().dump());
  if (!r32.ok()) o.fail("{h3,h2} != 0: " + r32.to_json().dump());
  if (o.pass) o.note = "{h2,h1} = 0 to hbar^3, {h3,h2} = 0 to hbar^2";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const auto t = hodge::one_point_table(2);
  const auto bf = oracle::one_point_bruteforce(5, 2);
  struct Named {
    int g, j, d;
    Rational value;
  };
  // t^{2g} k^{g-j} in the brute-force expansion is <lambda_j tau_d>_g
  for (const Named& n : {Named{1, 1, 0, Rational(1, 24)}, Named{1, 0, 1, Rational(1, 24)},
                         Named{2, 2, 2, Rational(7, 5760)}, Named{2, 0, 4, Rational(1, 1152)}}) {
    const Rational lib = t.value(n.g, n.j, {n.d});
    const Rational ref = bf[2 * n.g][n.g - n.j];
    if (lib != n.value || ref != n.value)
      o.fail("<lambda_" + std::to_string(n.j) + " tau_" + std::to_string(n.d) + ">_" + std::to_string(n.g) +
             ": table " + lib.str() + ", oracle " + ref.str());
  }
  if (o.pass) o.note = "four named values match table and oracle";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  try {
    const auto direct = hodge::s_tilde_direct(8);
    if (direct != hodge::s_tilde_via_sine(8)) o.fail("routes differ");
    hodge::s_tilde_series(8);
    o.note = std::to_string(direct.terms().size()) + " coefficients agree to hbar^8";
  } catch (const std::exception& e) {
    o.fail(e.what());
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const auto r = hodge::verify_linear_term_identity(4);
  if (!r.ok()) o.fail(r.to_json().dump());
  if (o.pass) o.note = r.details.dump();
  return o;
}

Outcome criterion_8() {
  Outcome o;
  using props::kBaseSeed;
  using props::kCases;
  const std::vector<std::pair<std::string, std::function<bool(std::uint64_t)>>> suites{
      {"euler-kills-dx", props::euler_kills_dx},
      {"dx-derivation", props::dx_derivation},
      {"bracket-antisymmetry", props::bracket_antisymmetric},
      {"bracket-jacobi", [](std::uint64_t s) { return props::bracket_jacobi(s).holds; }},
      {"miura-roundtrip", [](std::uint64_t s) { return props::miura_roundtrip(s, 4); }},
      {"exp-log", props::exp_log_inverse},
      {"normalize-idempotent", props::normalize_idempotent},
  };
  int total = 0;
  for (std::size_t k = 0; k < suites.size(); ++k) {
    for (int i = 0; i < kCases; ++i) {
      const std::uint64_t seed = kBaseSeed + 100000 * (k + 1) + i;
      ++total;
      if (!suites[k].second(seed)) {
        o.fail(suites[k].first + " fails for seed " + std::to_string(seed));
        break;
      }
    }
  }
  if (o.pass) o.note = std::to_string(suites.size()) + " suites x " + std::to_string(kCases) + " cases";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const int G = 5;
  int runs = 0;
  for (int g = 1; g <= G; ++g) {
    for (const char* which : {"cg", "ilw-t1", "linear-term"}) {
      nlohmann::json j;
      const int code = cli_exit({"--perturb-cg", std::to_string(g), "--perturb-delta", "1/1000000", "verify", which,
                                 "--genus", std::to_string(G)},
                                &j);
      ++runs;
      const std::string tag = std::string(which) + " with C_" + std::to_string(g) + " perturbed";
      if (code != 1) {
        o.fail(tag + " exited " + std::to_string(code));
        continue;
      }
      bool localized = false;
      if (j.is_object() && j.contains("details"))
        for (const auto& rep : j["details"])
          if (rep.contains("first_mismatch") && rep["first_mismatch"].contains("term")) localized = true;
      if (!localized) o.fail(tag + ": no first-mismatch locus");
    }
  }
  if (o.pass) o.note = std::to_string(runs) + " perturbed runs exit 1 with a locus";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                       criterion_6, criterion_7, criterion_8, criterion_9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": " << o.note << "\n";
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
