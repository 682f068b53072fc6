#pragma once

// Exact Gauss-Jordan elimination over Rational.
//
// Two implementations share this interface: a plain serial reference and an
// OpenMP kernel that eliminates the non-pivot rows of each step in parallel.
// Pivoting is deterministic (first nonzero entry at or below the current row
// in the current column), so both produce bit-identical results.

#include <cstddef>
#include <optional>
#include <vector>

#include "ilwhodge/rational.hpp"

namespace ilwhodge::linsolve {

enum class Execution { serial, parallel };

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Solution {
  bool consistent = true;
  std::size_t rank = 0;
  /// One solution with every free variable set to zero (empty if inconsistent).
  std::vector<Rational> particular;
  /// Basis of the kernel of A, one vector per free column.
  std::vector<std::vector<Rational>> nullspace;
  /// Original index of the first equation reducing to 0 = nonzero.
  std::optional<std::size_t> inconsistent_row;
};

Solution solve_serial(const Matrix& a, const std::vector<Rational>& b);
Solution solve_parallel(const Matrix& a, const std::vector<Rational>& b);
Solution solve(const Matrix& a, const std::vector<Rational>& b, Execution exec = Execution::parallel);

}  // namespace ilwhodge::linsolve
