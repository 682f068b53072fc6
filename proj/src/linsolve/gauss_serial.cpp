#include "reduced.hpp"

namespace ilwhodge::linsolve {

Solution solve_serial(const Matrix& a, const std::vector<Rational>& b) {
  detail::Augmented aug = detail::augment(a, b);
  Matrix& m = aug.m;
  const std::size_t rows = m.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    detail::swap_rows(aug, row, pivot);
    const Rational inv = m(row, col).reciprocal();
    for (std::size_t c = col; c <= cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c <= cols; ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return detail::extract(aug, pivot_cols);
}

Solution solve(const Matrix& a, const std::vector<Rational>& b, Execution exec) {
  return exec == Execution::serial ? solve_serial(a, b) : solve_parallel(a, b);
}

}  // namespace ilwhodge::linsolve
