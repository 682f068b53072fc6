#include <omp.h>

#include "reduced.hpp"

namespace ilwhodge::linsolve {

Solution solve_parallel(const Matrix& a, const std::vector<Rational>& b) {
  detail::Augmented aug = detail::augment(a, b);
  Matrix& m = aug.m;
  const auto rows = static_cast<long>(m.rows());
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  long row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    long pivot = row;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    detail::swap_rows(aug, static_cast<std::size_t>(row), static_cast<std::size_t>(pivot));
    const Rational inv = m(row, col).reciprocal();
    for (std::size_t c = col; c <= cols; ++c) m(row, c) *= inv;

    // Each non-pivot row is updated independently from the pivot row.
#pragma omp parallel for schedule(dynamic, 4)
    for (long r = 0; r < rows; ++r) {
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

}  // namespace ilwhodge::linsolve
