#include "flasque/normal_form.hpp"

#include "flasque/error.hpp"

namespace flasque {

namespace {

struct Bezout {
  Integer g, s, t;
};

Bezout gcdext(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ColumnHnf column_hnf(const IntMatrix& a) {
  ColumnHnf out{a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& h = out.form;
  IntMatrix& u = out.transform;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < m && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(h(i, j)) == 0) continue;
      if (sgn(h(i, c)) == 0) {
        h.swap_cols(c, j);
        u.swap_cols(c, j);
        continue;
      }
      if (mpz_divisible_p(h(i, j).get_mpz_t(), h(i, c).get_mpz_t())) {
        Integer q = h(i, j) / h(i, c);
        h.sub_col_multiple(j, c, q);
        u.sub_col_multiple(j, c, q);
        continue;
      }
      Bezout b = gcdext(h(i, c), h(i, j));
      Integer x = h(i, c) / b.g;
      Integer y = h(i, j) / b.g;
      // det [[s, -y], [t, x]] = s x + t y = 1
      h.combine_cols(c, j, b.s, b.t, -y, x);
      u.combine_cols(c, j, b.s, b.t, -y, x);
    }
    if (sgn(h(i, c)) == 0) continue;
    if (sgn(h(i, c)) < 0) {
      h.negate_col(c);
      u.negate_col(c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Integer q = floor_div(h(i, j), h(i, c));
      if (sgn(q) == 0) continue;
      h.sub_col_multiple(j, c, q);
      u.sub_col_multiple(j, c, q);
    }
    ++c;
  }
  out.rank = c;
  return out;
}

IntMatrix image_basis(const IntMatrix& a) {
  ColumnHnf h = column_hnf(a);
  return h.form.columns(0, h.rank);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  ColumnHnf h = column_hnf(a);
  IntMatrix k = h.transform.columns(h.rank, a.cols() - h.rank);
  return image_basis(k);
}

std::size_t rank(const IntMatrix& a) { return column_hnf(a).rank; }

SmithForm smith_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& d = s.diagonal;
  const std::size_t lim = std::min(m, n);
  std::size_t t = 0;
  for (; t < lim; ++t) {
    // pivot of least absolute value in the trailing block
    std::size_t pi = m, pj = n;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        if (pi == m || abs(d(i, j)) < best) {
          best = abs(d(i, j));
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;
    d.swap_rows(t, pi);
    s.left.swap_rows(t, pi);
    d.swap_cols(t, pj);
    s.right.swap_cols(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        if (mpz_divisible_p(d(i, t).get_mpz_t(), d(t, t).get_mpz_t())) {
          Integer q = d(i, t) / d(t, t);
          d.add_row_multiple(i, t, -q);
          s.left.add_row_multiple(i, t, -q);
          continue;
        }
        Bezout b = gcdext(d(t, t), d(i, t));
        Integer x = d(t, t) / b.g;
        Integer y = d(i, t) / b.g;
        d.combine_rows(t, i, b.s, b.t, -y, x);
        s.left.combine_rows(t, i, b.s, b.t, -y, x);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        if (mpz_divisible_p(d(t, j).get_mpz_t(), d(t, t).get_mpz_t())) {
          Integer q = d(t, j) / d(t, t);
          d.sub_col_multiple(j, t, q);
          s.right.sub_col_multiple(j, t, q);
          continue;
        }
        Bezout b = gcdext(d(t, t), d(t, j));
        Integer x = d(t, t) / b.g;
        Integer y = d(t, j) / b.g;
        d.combine_cols(t, j, b.s, b.t, -y, x);
        s.right.combine_cols(t, j, b.s, b.t, -y, x);
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (sgn(d(i, t)) != 0) column_clear = false;
      if (!column_clear) continue;

      // divisibility of the trailing block by the pivot
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      d.add_row_multiple(t, bad_row, Integer(1));
      s.left.add_row_multiple(t, bad_row, Integer(1));
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      s.left.negate_row(t);
    }
  }
  s.rank = t;
  return s;
}

IntVector elementary_divisors(const IntMatrix& a) {
  SmithForm s = smith_form(a);
  IntVector out;
  for (std::size_t i = 0; i < s.rank; ++i) out.push_back(s.divisor(i));
  return out;
}

LinearSolver::LinearSolver(const IntMatrix& a) : rows_(a.rows()), cols_(a.cols()), smith_(smith_form(a)) {}

std::optional<IntVector> LinearSolver::solve(const IntVector& b) const {
  if (b.size() != rows_) throw Error(Errc::DimensionMismatch, "right-hand side length");
  IntVector c = smith_.left * b;
  IntVector y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < smith_.rank) {
      const Integer& d = smith_.diagonal(i, i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      y[i] = c[i] / d;
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return smith_.right * y;
}

std::optional<IntMatrix> LinearSolver::solve(const IntMatrix& b) const {
  IntMatrix x(cols_, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(b.col(j));
    if (!col) return std::nullopt;
    x.set_col(j, *col);
  }
  return x;
}

std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b) { return LinearSolver(a).solve(b); }

bool columns_in_span(const IntMatrix& vectors, const IntMatrix& span) {
  if (vectors.cols() == 0) return true;
  if (vectors.rows() != span.rows()) throw Error(Errc::DimensionMismatch, "span membership");
  return LinearSolver(span).solve(vectors).has_value();
}

}  // namespace flasque
