#include "flasque/integer_matrix.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <utility>

#include "flasque/error.hpp"

namespace flasque {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

IntMatrix IntMatrix::column(const IntVector& v) { return from_columns(v.size(), {v}); }

IntMatrix IntMatrix::row(const IntVector& v) {
  IntMatrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_col(std::size_t j, const IntVector& v) {
  if (v.size() != rows_) throw Error(Errc::DimensionMismatch, "column length");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  assert(first + count <= cols_);
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  assert(first + count <= rows_);
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(Errc::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(Errc::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::sub_col_multiple(std::size_t j, std::size_t k, const Integer& q) {
  if (sgn(q) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (sgn((*this)(i, k)) != 0) (*this)(i, j) -= q * (*this)(i, k);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const Integer& q) {
  if (sgn(q) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn((*this)(k, j)) != 0) (*this)(i, j) += q * (*this)(k, j);
}

void IntMatrix::combine_cols(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                             const Integer& u, const Integer& v) {
  Integer x, y;
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer& ea = (*this)(i, a);
    Integer& eb = (*this)(i, b);
    if (sgn(ea) == 0 && sgn(eb) == 0) continue;
    x = s * ea + t * eb;
    y = u * ea + v * eb;
    ea = x;
    eb = y;
  }
}

void IntMatrix::combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                             const Integer& u, const Integer& v) {
  Integer x, y;
  for (std::size_t j = 0; j < cols_; ++j) {
    Integer& ea = (*this)(a, j);
    Integer& eb = (*this)(b, j);
    if (sgn(ea) == 0 && sgn(eb) == 0) continue;
    x = s * ea + t * eb;
    y = u * ea + v * eb;
    ea = x;
    eb = y;
  }
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix r = a;
  r *= Integer(-1);
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matrix product");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) r(i, j) += aik * b(k, j);
    }
  return r;
}

IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector product");
  IntVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(v[j]) != 0) r[i] += a(i, j) * v[j];
  return r;
}

IntVector operator+(IntVector a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVector operator-(IntVector a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector difference");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

IntVector operator*(const Integer& s, IntVector v) {
  for (auto& x : v) x *= s;
  return v;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

IntVector zero_vector(std::size_t n) { return IntVector(n); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n);
  v.at(i) = 1;
  return v;
}

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix hstack(const std::vector<IntMatrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(Errc::DimensionMismatch, "hstack");
    cols += b.cols();
  }
  IntMatrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, offset + j) = b(i, j);
    offset += b.cols();
  }
  return m;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) { return hstack({a, b}, a.rows()); }

IntMatrix vstack(const std::vector<IntMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(Errc::DimensionMismatch, "vstack");
    rows += b.rows();
  }
  IntMatrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(offset + i, j) = b(i, j);
    offset += b.rows();
  }
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) { return vstack({a, b}, a.cols()); }

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace flasque
