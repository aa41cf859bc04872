#pragma once

#include "latdef/intlat.hpp"
#include "latdef/pointconfig.hpp"

#include <vector>

namespace latdef {

// Vertex description: the inclusion-minimal point set, sorted.
struct VPolytope {
  std::size_t ambient_dim = 0;
  std::vector<Point> vertices;
};

// <normal, x> <= offset with a primitive normal.
struct Facet {
  Point normal;
  Integer offset;
};

// <normal, x> == value; present exactly when the polytope is not full-dimensional.
struct AffineEquation {
  Point normal;
  Integer value;
};

// Facet description relative to the affine hull; no redundant facets.
struct HPolytope {
  std::size_t ambient_dim = 0;
  std::vector<Facet> facets;
  std::vector<AffineEquation> affine_hull;
};

struct Hull {
  VPolytope vpoly;
  HPolytope hpoly;
  int dim = -1;
};

// exact combined V- and H-description of conv(a); a must be non-empty
Hull convex_hull(const PointConfiguration& a);

// all lattice points of conv(p), lexicographic order
std::vector<Point> lattice_points(const VPolytope& p);

// lattice points in the topological interior; empty whenever dim < ambient
std::vector<Point> interior_lattice_points(const VPolytope& p);

// (dim!)-normalized volume: n! * euclidean volume for full-dimensional p,
// 0 otherwise; always an integer for lattice polytopes
Integer normalized_volume(const VPolytope& p);

// smallest c >= 1 with interior lattice points in c*p; p must be
// full-dimensional, and c <= ambient_dim + 1 always holds
int codegree(const VPolytope& p);

struct LatticeWidthResult {
  Integer width;
  Point direction;      // primitive achieving direction
  Integer search_bound; // max-norm bound that the enumeration covered
};

// min over primitive w != 0 of (max <w,v> - min <w,v>); p full-dimensional.
// Any direction beating the best axis width w0 satisfies |<w, e_j>| <= w0
// for n independent edge vectors e_j, which bounds the max-norm of w by
// w0 * ||(E^T)^-1||_inf; that certified bound is enumerated and reported.
LatticeWidthResult lattice_width(const VPolytope& p);

// image configuration under a surjective lattice projection
PointConfiguration project_config(const PointConfiguration& a, const LatticeProjection& pi);

VPolytope dilate(const VPolytope& p, const Integer& c);
// conv(a) as a vertex set
VPolytope to_vpolytope(const PointConfiguration& a);

}  // namespace latdef
