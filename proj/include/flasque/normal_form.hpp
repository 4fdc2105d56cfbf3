#pragma once

#include <optional>

#include "flasque/integer_matrix.hpp"

namespace flasque {

/// Column-style Hermite normal form: a * transform == form, with transform
/// unimodular. The first `rank` columns of `form` are in lower echelon shape
/// with positive pivots and reduced entries left of each pivot; the remaining
/// columns are zero, and the matching columns of `transform` span ker(a).
struct ColumnHnf {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
};

ColumnHnf column_hnf(const IntMatrix& a);

/// Canonical basis (columns) of the subgroup generated by the columns of a.
IntMatrix image_basis(const IntMatrix& a);

/// Canonical basis (columns) of {x : a x = 0}. Always saturated.
IntMatrix kernel_basis(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// left * a * right == diagonal, left and right unimodular, diagonal entries
/// d_0 | d_1 | ... | d_{rank-1} positive, all others zero.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;

  Integer divisor(std::size_t i) const { return diagonal(i, i); }
};

SmithForm smith_form(const IntMatrix& a);

/// Nonzero diagonal entries of the Smith form (including unit divisors).
IntVector elementary_divisors(const IntMatrix& a);

/// Integral solver for a x = b with the Smith decomposition of `a` computed once.
class LinearSolver {
 public:
  explicit LinearSolver(const IntMatrix& a);

  std::optional<IntVector> solve(const IntVector& b) const;
  bool solvable(const IntVector& b) const { return solve(b).has_value(); }
  /// Solve a X = B column by column; nullopt if any column has no solution.
  std::optional<IntMatrix> solve(const IntMatrix& b) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  SmithForm smith_;
};

std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b);

/// True iff every column of `vectors` lies in the column span of `span`.
bool columns_in_span(const IntMatrix& vectors, const IntMatrix& span);

}  // namespace flasque
