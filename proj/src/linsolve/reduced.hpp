#pragma once

#include <stdexcept>
#include <vector>

#include "ilwhodge/linsolve.hpp"

namespace ilwhodge::linsolve::detail {

/// Augmented system [A | b] with a row permutation record.
struct Augmented {
  Matrix m;
  std::vector<std::size_t> origin;  // origin[r] = input row now stored at r
};

inline Augmented augment(const Matrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("linsolve: rhs length mismatch");
  Augmented out{Matrix(a.rows(), a.cols() + 1), {}};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.m(r, c) = a(r, c);
    out.m(r, a.cols()) = b[r];
    out.origin.push_back(r);
  }
  return out;
}

inline void swap_rows(Augmented& aug, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < aug.m.cols(); ++c) std::swap(aug.m(r1, c), aug.m(r2, c));
  std::swap(aug.origin[r1], aug.origin[r2]);
}

/// Reads the solution off a matrix in reduced row echelon form.
inline Solution extract(const Augmented& aug, const std::vector<std::size_t>& pivot_cols) {
  const std::size_t n = aug.m.cols() - 1;
  Solution s;
  s.rank = pivot_cols.size();
  for (std::size_t r = s.rank; r < aug.m.rows(); ++r) {
    if (!aug.m(r, n).is_zero()) {
      s.consistent = false;
      if (!s.inconsistent_row || aug.origin[r] < *s.inconsistent_row) s.inconsistent_row = aug.origin[r];
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -aug.m(r, f);
    s.nullspace.push_back(std::move(v));
  }
  if (s.consistent) {
    s.particular.assign(n, Rational());
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) s.particular[pivot_cols[r]] = aug.m(r, n);
  }
  return s;
}

}  // namespace ilwhodge::linsolve::detail
