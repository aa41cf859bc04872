#pragma once

#include "latdef/intlat.hpp"
#include "latdef/numeric.hpp"

#include <optional>
#include <vector>

namespace latdef {

// Finite subset of Z^n, stored sorted lexicographically without duplicates.
// The empty configuration is representable; operations that need points say so.
struct PointConfiguration {
  std::size_t ambient_dim = 0;
  std::vector<Point> points;

  static PointConfiguration make(std::size_t ambient, std::vector<Point> pts);

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
  bool contains(const Point& p) const;

  bool operator==(const PointConfiguration& o) const {
    return ambient_dim == o.ambient_dim && points == o.points;
  }
  bool operator!=(const PointConfiguration& o) const { return !(*this == o); }
};

// Tuple (A_0, ..., A_k) of configurations sharing one ambient dimension.
struct Family {
  std::vector<PointConfiguration> members;

  static Family make(std::vector<PointConfiguration> members);

  std::size_t ambient_dim() const { return members.empty() ? 0 : members[0].ambient_dim; }
  std::size_t size() const { return members.size(); }
  // number of members minus one, the customary index bound
  std::size_t k() const { return members.size() - 1; }
};

// Face of a configuration: the points maximizing <normal, .>. The improper
// face carries the zero normal and all points.
struct Face {
  PointConfiguration parent;
  Point normal;
  PointConfiguration points;

  PointConfiguration complement() const;
};

// Configuration union_i (A_i x {e_i}) in Z^(n+k), tags aligned with points.
struct CayleySumResult {
  PointConfiguration config;
  std::vector<std::size_t> summand_tags;

  std::size_t parts() const;
  PointConfiguration part(std::size_t i) const;
};

// Affine lattice isomorphism between aff(A) cap Z^n and aff(B) cap Z^m,
// mapping A onto B. Apply factors through coordinates on the saturated
// difference lattices, so images of lattice points are lattice points.
struct AffineIso {
  Point src_base;
  IntMatrix src_basis;  // n x d
  IntMatrix map;        // d x d, |det| = 1
  Point shift;          // length d
  Point dst_base;
  IntMatrix dst_basis;  // m x d

  Point apply(const Point& x) const;
};

// rank of the difference lattice; the empty configuration has dimension -1
int dimension(const PointConfiguration& a);

PointConfiguration minkowski_sum(const PointConfiguration& a, const PointConfiguration& b);
PointConfiguration minkowski_sum(const Family& f);

// all members non-empty ("proper") required
CayleySumResult cayley_sum(const Family& f);

// span of {p - q : p, q in a}; independent of any basepoint choice
Lattice difference_lattice(const PointConfiguration& a);
// sum of the members' difference lattices
Lattice family_lattice(const Family& f);

bool is_spanning(const Family& f);
bool is_spanning(const PointConfiguration& a);

// every face of conv(a) intersected with a, improper face included, empty
// face excluded; each face carries a witnessing normal
std::vector<Face> faces(const PointConfiguration& a);

// {0, e_1, ..., e_k} in Z^k; k = 0 gives the one-point configuration in Z^0
PointConfiguration standard_simplex(std::size_t k);

std::optional<AffineIso> is_isomorphic(const PointConfiguration& a, const PointConfiguration& b);

// coordinates on a saturated lattice through a basepoint; to_local is exact
// on base + lattice and rejects anything else
struct LatticeChart {
  Point base;
  IntMatrix basis;  // ambient x dim
  std::size_t dim = 0;

  Point to_local(const Point& x) const;
  Point to_ambient(const Point& y) const;
};

LatticeChart make_chart(const PointConfiguration& a);
LatticeChart make_chart(const Point& base, const Lattice& saturated);

}  // namespace latdef
