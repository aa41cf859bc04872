#pragma once

#include "latdef/intmatrix.hpp"
#include "latdef/numeric.hpp"

#include <optional>
#include <vector>

namespace latdef {

// Column-style Hermite normal form h = m * u with u unimodular. Pivot columns
// come first with strictly increasing pivot rows, trailing columns are zero,
// pivots are positive, and in each pivot row the entries of earlier pivot
// columns are reduced into [0, pivot). Matrices with equal column spans get
// identical nonzero columns, which is what makes lattice bases canonical.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

// Diagonal s = u * m * v with u, v unimodular, diagonal entries nonnegative
// and each dividing the next.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors() const;
};

// Sublattice of Z^n. The basis holds one canonical (Hermite-reduced) column
// per rank; two lattices are equal iff their fields compare equal.
struct Lattice {
  std::size_t ambient_dim = 0;
  IntMatrix basis;  // ambient_dim x rank

  std::size_t rank() const { return basis.cols(); }
  bool contains(const Point& p) const;
  // coordinates of p in the basis; empty when p is outside the lattice
  std::optional<Point> coordinates(const Point& p) const;
  bool operator==(const Lattice& o) const {
    return ambient_dim == o.ambient_dim && basis == o.basis;
  }
};

// Surjective affine map Z^n -> Z^k, x |-> matrix * (x - basepoint). The
// linear part has all Smith invariant factors equal to one.
struct LatticeProjection {
  IntMatrix matrix;  // k x n
  Point basepoint;   // length n

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  Point apply(const Point& x) const;
};

HermiteForm hermite_normal_form(const IntMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

// span of the generators as a sublattice of Z^ambient; no generators gives
// the rank-0 lattice
Lattice lattice_span(const std::vector<Point>& generators, std::size_t ambient);
Lattice lattice_from_columns(const IntMatrix& m);

// (l tensor Q) intersected with Z^n: smallest sublattice of full rank ratio
// containing l with torsion-free quotient
Lattice saturation(const Lattice& l);

// true iff the columns extend to a basis of Z^n, i.e. all Smith invariant
// factors equal one; more columns than rows is malformed input
bool is_primitive_system(const IntMatrix& m);

// projection Z^n -> Z^(n - rank l) with kernel exactly l; l must be saturated
LatticeProjection quotient_projection(const Lattice& l);

// one integer solution of a * x = b, if any
std::optional<Point> solve_integer(const IntMatrix& a, const Point& b);
// integer solutions of a * X = B, column by column; empty when any column fails
std::optional<IntMatrix> solve_integer_columns(const IntMatrix& a, const IntMatrix& b);
// canonical basis of {x : m * x = 0}; integer kernels are saturated
Lattice kernel_lattice(const IntMatrix& m);
// inverse of a matrix with determinant +-1
IntMatrix unimodular_inverse(const IntMatrix& m);

Lattice full_lattice(std::size_t n);
bool is_full(const Lattice& l);
Lattice lattice_sum(const Lattice& a, const Lattice& b);

}  // namespace latdef
