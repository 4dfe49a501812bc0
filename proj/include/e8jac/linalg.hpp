#ifndef E8JAC_LINALG_HPP
#define E8JAC_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "e8jac/rational.hpp"

namespace e8jac {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;  // row-major

struct RowEchelon {
  RMatrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

namespace detail {
// Size of an entry for pivot selection: |numerator| * denominator.
inline Integer pivot_weight(const Rational& x) { return abs(x.get_num()) * x.get_den(); }
}  // namespace detail

/// Reduced row echelon form by exact Gauss-Jordan elimination. In each column
/// the pivot is the nonzero entry with the smallest |num|*den (ties: lowest row),
/// which keeps intermediate sizes down and makes the result reproducible.
inline RowEchelon row_reduce(RMatrix a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  RowEchelon r;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t best = a.size();
    for (std::size_t i = row; i < a.size(); ++i) {
      if (sgn(a[i][col]) == 0) continue;
      if (best == a.size() || detail::pivot_weight(a[i][col]) < detail::pivot_weight(a[best][col])) best = i;
    }
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (sgn(a[row][j]) != 0) a[i][j] -= f * a[row][j];
    }
    r.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  r.rref = std::move(a);
  return r;
}

inline std::size_t rank(const RMatrix& a, std::size_t cols) { return row_reduce(a, cols).pivots.size(); }

/// Basis of {x : A x = 0}; one vector per free column, with that entry 1.
inline std::vector<RVector> nullspace(const RMatrix& a, std::size_t cols) {
  RowEchelon e = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Left kernel: {y : y^T A = 0}, i.e. dependencies among the rows.
inline std::vector<RVector> row_dependencies(const RMatrix& a, std::size_t cols) {
  RMatrix t(cols, RVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return nullspace(t, a.size());
}

}  // namespace e8jac

#endif  // E8JAC_LINALG_HPP
