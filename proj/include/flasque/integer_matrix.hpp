#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace flasque {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense matrix over the integers (arbitrary precision), row-major.
/// Matrices act on column vectors; composition f∘g is f * g.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);
  static IntMatrix column(const IntVector& v);
  static IntMatrix row(const IntVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector col(std::size_t j) const;
  IntVector row_vector(std::size_t i) const;
  void set_col(std::size_t j, const IntVector& v);

  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  IntMatrix transpose() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Column operations used by the normal-form routines.
  void swap_cols(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  void negate_col(std::size_t j);
  void negate_row(std::size_t i);
  /// col_j -= q * col_k
  void sub_col_multiple(std::size_t j, std::size_t k, const Integer& q);
  /// row_i += q * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const Integer& q);
  /// (col_a, col_b) <- (s*col_a + t*col_b, u*col_a + v*col_b)
  void combine_cols(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                    const Integer& v);
  void combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                    const Integer& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& s, IntMatrix a);
IntVector operator*(const IntMatrix& a, const IntVector& v);

IntVector operator+(IntVector a, const IntVector& b);
IntVector operator-(IntVector a, const IntVector& b);
IntVector operator*(const Integer& s, IntVector v);
bool is_zero(const IntVector& v);
IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
IntVector make_vector(std::initializer_list<long> values);
Integer dot(const IntVector& a, const IntVector& b);

IntMatrix hstack(const std::vector<IntMatrix>& blocks, std::size_t rows);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const std::vector<IntMatrix>& blocks, std::size_t cols);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
/// Kronecker product; basis e_i ⊗ f_j sits at index i * b.rows() + j.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace flasque
