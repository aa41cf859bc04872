#include "latdef/intmatrix.hpp"

#include "latdef/errors.hpp"

#include <utility>

namespace latdef {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Point>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw input_error("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Point>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw input_error("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Point IntMatrix::row(std::size_t i) const {
  Point r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Point IntMatrix::column(std::size_t j) const {
  Point c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Point> IntMatrix::columns() const {
  std::vector<Point> cs(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cs[j] = column(j);
  return cs;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
}

void IntMatrix::row_transform(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                              const Integer& c, const Integer& d) {
  for (std::size_t k = 0; k < cols_; ++k) {
    Integer ri = at(i, k), rj = at(j, k);
    at(i, k) = a * ri + b * rj;
    at(j, k) = c * ri + d * rj;
  }
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw input_error("matmul: shape mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Point matvec(const IntMatrix& a, const Point& x) {
  if (a.cols() != x.size()) throw input_error("matvec: shape mismatch");
  Point r(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * x[j];
  return r;
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw input_error("determinant: square matrix required");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Integer(-m.at(n - 1, n - 1));
}

}  // namespace latdef
