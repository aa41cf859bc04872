#include "doctest.h"

#include "gen.hpp"
#include "latdef/intmatrix.hpp"

using namespace latdef;

namespace {

// independent reference: cofactor expansion along the first row
Integer det_cofactor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const Integer term = m.at(0, j) * det_cofactor(sub);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("determinant on fixed matrices") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  CHECK(determinant(m) == -2);

  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(IntMatrix(0, 0)) == 1);

  IntMatrix sing(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) sing.at(i, j) = Integer(i) + Integer(j);
  CHECK(determinant(sing) == 0);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  testgen::Rng rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.irange(1, 4));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.irange(-6, 6);
    CHECK(determinant(m) == det_cofactor(m));
  }
}

TEST_CASE("matmul and matvec") {
  IntMatrix a(2, 3), b(3, 2);
  int v = 1;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = v++;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = v++;
  const IntMatrix c = matmul(a, b);
  REQUIRE(c.rows() == 2);
  REQUIRE(c.cols() == 2);
  // a = [1 2 3; 4 5 6], b = [7 8; 9 10; 11 12]
  CHECK(c.at(0, 0) == 58);
  CHECK(c.at(0, 1) == 64);
  CHECK(c.at(1, 0) == 139);
  CHECK(c.at(1, 1) == 154);

  CHECK(matvec(a, Point{1, 0, -1}) == Point{-2, -2});
}

TEST_CASE("row and column operations preserve determinant up to the expected factor") {
  testgen::Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = rng.irange(-5, 5);
    const Integer d = determinant(m);

    IntMatrix s = m;
    s.add_row_multiple(0, 2, 3);
    CHECK(determinant(s) == d);
    s = m;
    s.swap_cols(0, 1);
    CHECK(determinant(s) == -d);
    s = m;
    s.negate_row(1);
    CHECK(determinant(s) == -d);
    s = m;
    // (r0, r1) <- (2 r0 + r1, r0 + r1) has determinant factor 1
    s.row_transform(0, 1, 2, 1, 1, 1);
    CHECK(determinant(s) == d);
  }
}

TEST_CASE("construction helpers") {
  const std::vector<Point> cols{{1, 2}, {3, 4}, {5, 6}};
  const IntMatrix m = IntMatrix::from_columns(cols, 2);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 3);
  CHECK(m.column(1) == Point{3, 4});
  CHECK(m.row(0) == Point{1, 3, 5});
  CHECK(m.transposed() == IntMatrix::from_rows(cols, 2));
  CHECK(m.columns() == cols);
}

TEST_CASE("zero-size matrices are usable") {
  const IntMatrix none(0, 3);
  CHECK(none.rows() == 0);
  const IntMatrix t = none.transposed();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 0);
  CHECK(matvec(none, Point{1, 2, 3}).empty());
}
