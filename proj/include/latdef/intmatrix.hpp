#pragma once

#include "latdef/numeric.hpp"

#include <cstddef>
#include <vector>

namespace latdef {

// Dense integer matrix, row-major storage. Zero-sized dimensions are allowed
// and behave as the corresponding empty maps.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<Point>& cols, std::size_t rows);
  static IntMatrix from_rows(const std::vector<Point>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Point row(std::size_t i) const;
  Point column(std::size_t j) const;
  std::vector<Point> columns() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row[dst] += c * row[src], col[dst] += c * col[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& c);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& c);
  // (row i, row j) <- (a*row i + b*row j, c*row i + d*row j)
  void row_transform(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                     const Integer& c, const Integer& d);

  IntMatrix transposed() const;

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
Point matvec(const IntMatrix& a, const Point& x);

// Bareiss fraction-free elimination; square input required
Integer determinant(IntMatrix m);

}  // namespace latdef
