#include "latdef/intlat.hpp"

#include "latdef/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cstdlib>

namespace latdef {

namespace {

Integer abs_i(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> f;
  std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (s.at(i, i) != 0) f.push_back(s.at(i, i));
  return f;
}

Point LatticeProjection::apply(const Point& x) const {
  return matvec(matrix, sub(x, basepoint));
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  std::size_t n = m.rows(), c = m.cols();
  HermiteForm f{m, IntMatrix::identity(c)};
  IntMatrix& h = f.h;
  IntMatrix& u = f.u;
  std::size_t p = 0;
  for (std::size_t r = 0; r < n && p < c; ++r) {
    bool any = false;
    for (std::size_t j = p; j < c; ++j)
      if (h.at(r, j) != 0) { any = true; break; }
    if (!any) continue;
    for (;;) {
      std::size_t jmin = c;
      for (std::size_t j = p; j < c; ++j) {
        if (h.at(r, j) == 0) continue;
        if (jmin == c || abs_i(h.at(r, j)) < abs_i(h.at(r, jmin))) jmin = j;
      }
      h.swap_cols(p, jmin);
      u.swap_cols(p, jmin);
      bool clean = true;
      for (std::size_t j = p + 1; j < c; ++j) {
        if (h.at(r, j) == 0) continue;
        Integer q = h.at(r, j) / h.at(r, p);
        h.add_col_multiple(j, p, -q);
        u.add_col_multiple(j, p, -q);
        if (h.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, p) < 0) {
      h.negate_col(p);
      u.negate_col(p);
    }
    for (std::size_t j = 0; j < p; ++j) {
      Integer q = floor_div(h.at(r, j), h.at(r, p));
      h.add_col_multiple(j, p, -q);
      u.add_col_multiple(j, p, -q);
    }
    ++p;
  }
  return f;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  std::size_t nr = m.rows(), nc = m.cols();
  SmithForm f{m, IntMatrix::identity(nr), IntMatrix::identity(nc), 0};
  IntMatrix& s = f.s;
  IntMatrix& u = f.u;
  IntMatrix& v = f.v;
  std::size_t t = 0;
  while (t < nr && t < nc) {
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (s.at(i, j) != 0 && (pi == nr || abs_i(s.at(i, j)) < abs_i(s.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == nr) break;
    s.swap_rows(t, pi); u.swap_rows(t, pi);
    s.swap_cols(t, pj); v.swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (s.at(i, t) == 0) continue;
        Integer q = s.at(i, t) / s.at(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s.at(i, t) != 0) {
          // remainder strictly smaller than the pivot: promote it
          s.swap_rows(t, i); u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (s.at(t, j) == 0) continue;
        Integer q = s.at(t, j) / s.at(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s.at(t, j) != 0) {
          s.swap_cols(t, j); v.swap_cols(t, j);
          clean = false;
        }
      }
    }
    ++t;
  }
  for (std::size_t i = 0; i < t; ++i)
    if (s.at(i, i) < 0) { s.negate_row(i); u.negate_row(i); }
  // enforce the divisibility chain d1 | d2 | ...
  for (std::size_t i = 0; i + 1 < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      Integer a = s.at(i, i), b = s.at(j, j);
      if (b % a == 0) continue;
      // rows/cols i and j have support only on the diagonal pair, so the
      // classical 2x2 reduction diag(a,b) -> diag(gcd,lcm) applies verbatim
      s.add_col_multiple(i, j, 1);
      v.add_col_multiple(i, j, 1);
      ExtendedGcd e = extended_gcd(a, b);
      Integer bg = b / e.g, ag = a / e.g;
      s.row_transform(i, j, e.x, e.y, -bg, ag);
      u.row_transform(i, j, e.x, e.y, -bg, ag);
      Integer q = s.at(i, j) / s.at(i, i);
      s.add_col_multiple(j, i, -q);
      v.add_col_multiple(j, i, -q);
    }
  }
  f.rank = t;
  return f;
}

Lattice lattice_from_columns(const IntMatrix& m) {
  HermiteForm f = hermite_normal_form(m);
  std::size_t r = 0;
  for (std::size_t j = 0; j < f.h.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < f.h.rows(); ++i)
      if (f.h.at(i, j) != 0) { zero = false; break; }
    if (!zero) ++r;
  }
  IntMatrix basis(m.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) basis.at(i, j) = f.h.at(i, j);
  return Lattice{m.rows(), basis};
}

Lattice lattice_span(const std::vector<Point>& generators, std::size_t ambient) {
  for (const auto& g : generators)
    if (g.size() != ambient) throw input_error("lattice_span: generator length mismatch");
  return lattice_from_columns(IntMatrix::from_columns(generators, ambient));
}

bool Lattice::contains(const Point& p) const { return coordinates(p).has_value(); }

std::optional<Point> Lattice::coordinates(const Point& p) const {
  if (p.size() != ambient_dim) throw input_error("Lattice: point length mismatch");
  return solve_integer(basis, p);
}

std::optional<Point> solve_integer(const IntMatrix& a, const Point& b) {
  if (b.size() != a.rows()) throw input_error("solve_integer: length mismatch");
  HermiteForm f = hermite_normal_form(a);
  // pivot structure of h: strictly increasing pivot rows on leading columns
  std::size_t n = a.rows(), c = a.cols();
  Point y(c, Integer(0));
  Point r = b;
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < c && f.h.at(i, j) != 0) {
      Integer q = r[i] / f.h.at(i, j);
      if (q * f.h.at(i, j) != r[i]) return std::nullopt;
      for (std::size_t t = 0; t < n; ++t) r[t] -= q * f.h.at(t, j);
      y[j] = q;
      ++j;
    } else if (r[i] != 0) {
      return std::nullopt;
    }
  }
  return matvec(f.u, y);
}

std::optional<IntMatrix> solve_integer_columns(const IntMatrix& a, const IntMatrix& b) {
  if (b.rows() != a.rows()) throw input_error("solve_integer_columns: shape mismatch");
  IntMatrix x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto xi = solve_integer(a, b.column(j));
    if (!xi) return std::nullopt;
    for (std::size_t i = 0; i < a.cols(); ++i) x.at(i, j) = (*xi)[i];
  }
  return x;
}

Lattice kernel_lattice(const IntMatrix& m) {
  HermiteForm f = hermite_normal_form(m);
  std::vector<Point> gens;
  for (std::size_t j = 0; j < f.h.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < f.h.rows(); ++i)
      if (f.h.at(i, j) != 0) { zero = false; break; }
    if (zero) gens.push_back(f.u.column(j));
  }
  return lattice_span(gens, m.cols());
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("unimodular_inverse: square matrix required");
  auto inv = solve_integer_columns(m, IntMatrix::identity(m.rows()));
  if (!inv) throw input_error("unimodular_inverse: matrix is not unimodular");
  return *inv;
}

Lattice saturation(const Lattice& l) {
  if (l.rank() == 0) return l;
  SmithForm f = smith_normal_form(l.basis);
  if (f.rank != l.rank()) throw input_error("saturation: basis columns are dependent");
  // basis = u^-1 s v^-1, so the saturated span is u^-1 applied to the first
  // rank coordinate axes
  IntMatrix uinv = unimodular_inverse(f.u);
  std::vector<Point> gens;
  for (std::size_t j = 0; j < f.rank; ++j) gens.push_back(uinv.column(j));
  return lattice_span(gens, l.ambient_dim);
}

bool is_primitive_system(const IntMatrix& m) {
  if (m.cols() > m.rows()) throw input_error("is_primitive_system: more columns than rows");
  SmithForm f = smith_normal_form(m);
  if (f.rank != m.cols()) return false;
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.s.at(i, i) != 1) return false;
  return true;
}

LatticeProjection quotient_projection(const Lattice& l) {
  std::size_t n = l.ambient_dim, r = l.rank();
  SmithForm f = smith_normal_form(l.basis);
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.s.at(i, i) != 1)
      throw precondition_error("quotient_projection: lattice is not saturated");
  if (f.rank != r) throw input_error("quotient_projection: basis columns are dependent");
  // u maps l onto the first r coordinate axes; the remaining rows of u kill
  // exactly l and form a primitive system because u is unimodular
  IntMatrix proj(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) proj.at(i - r, j) = f.u.at(i, j);
  return LatticeProjection{proj, Point(n, Integer(0))};
}

Lattice full_lattice(std::size_t n) { return Lattice{n, IntMatrix::identity(n)}; }

bool is_full(const Lattice& l) {
  return l.rank() == l.ambient_dim && l.basis == IntMatrix::identity(l.ambient_dim);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim != b.ambient_dim) throw input_error("lattice_sum: ambient mismatch");
  std::vector<Point> gens = a.basis.columns();
  for (auto& c : b.basis.columns()) gens.push_back(c);
  return lattice_span(gens, a.ambient_dim);
}

}  // namespace latdef
