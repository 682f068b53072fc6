#include <doctest.h>

#include <random>

#include "ilwhodge/linsolve.hpp"

using namespace ilwhodge;
using namespace ilwhodge::linsolve;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int sparsity) {
  std::uniform_int_distribution<long> v(-6, 6);
  std::uniform_int_distribution<int> keep(0, sparsity);
  Matrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng) == 0) a(r, c) = Rational(v(rng), 1 + (v(rng) + 6) % 4);
  return a;
}

std::vector<Rational> matvec(const Matrix& a, const std::vector<Rational>& x) {
  std::vector<Rational> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  return out;
}

}  // namespace

TEST_CASE("unique solution") {
  Matrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1;
  a(1, 0) = 1; a(1, 1) = 3;
  const auto s = solve(a, {Rational(3), Rational(4)});
  REQUIRE(s.consistent);
  CHECK(s.rank == 2);
  CHECK(s.nullspace.empty());
  CHECK(s.particular == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("inconsistent system reports the row") {
  Matrix a(3, 2);
  a(0, 0) = 1; a(0, 1) = 1;
  a(1, 0) = 2; a(1, 1) = 2;
  a(2, 0) = 1;
  const auto s = solve(a, {Rational(1), Rational(3), Rational(0)});
  CHECK_FALSE(s.consistent);
  REQUIRE(s.inconsistent_row.has_value());
  CHECK(*s.inconsistent_row == 1);
  CHECK(s.particular.empty());
}

TEST_CASE("nullspace vectors are in the kernel") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_matrix(rng, 5, 8, 2);
    std::vector<Rational> x(8);
    for (auto& xi : x) xi = Rational(static_cast<long>(rng() % 9) - 4);
    const auto b = matvec(a, x);
    const auto s = solve(a, b, Execution::serial);
    REQUIRE(s.consistent);
    CHECK(matvec(a, s.particular) == b);
    CHECK(s.rank + s.nullspace.size() == 8);
    for (const auto& v : s.nullspace) CHECK(matvec(a, v) == std::vector<Rational>(5));
  }
}

TEST_CASE("parallel kernel matches the serial reference") {
  std::mt19937_64 rng(2015);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 14;
    const auto a = random_matrix(rng, rows, cols, 1 + trial % 4);
    std::vector<Rational> b(rows);
    for (auto& bi : b) bi = Rational(static_cast<long>(rng() % 7) - 3);
    const auto s = solve_serial(a, b);
    const auto p = solve_parallel(a, b);
    CHECK(s.consistent == p.consistent);
    CHECK(s.rank == p.rank);
    CHECK(s.particular == p.particular);
    CHECK(s.nullspace == p.nullspace);
    CHECK(s.inconsistent_row == p.inconsistent_row);
  }
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(solve(Matrix(2, 2), {Rational(1)}), std::invalid_argument);
}
