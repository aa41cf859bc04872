#include "latdef/polytope.hpp"

#include "latdef/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace latdef {

namespace {

// raised on a violated invariant of the incremental 3d hull; the caller
// falls back to the hyperplane enumeration, which has no such invariants
struct hull_fail : std::logic_error {
  using std::logic_error::logic_error;
};

using FacetKey = std::pair<Point, Integer>;
using FacetSet = std::set<FacetKey>;

Point cross3(const Point& a, const Point& b) {
  return Point{a[1] * b[2] - a[2] * b[1],
               a[2] * b[0] - a[0] * b[2],
               a[0] * b[1] - a[1] * b[0]};
}

// Drops points that are midpoints of two others. Vertices never satisfy
// such a relation, and the certifying pair is taken from the input set,
// so one pass is sound no matter how many points drop at once.
std::vector<Point> midpoint_prune(const std::vector<Point>& pts) {
  std::set<Point> lookup(pts.begin(), pts.end());
  std::vector<Point> kept;
  for (const auto& q : pts) {
    const Point q2 = scaled(2, q);
    bool removable = false;
    for (const auto& p : pts) {
      if (p == q) continue;
      const Point r = sub(q2, p);
      if (r != p && lookup.count(r)) {  // r == p would force p == q
        removable = true;
        break;
      }
    }
    if (!removable) kept.push_back(q);
  }
  return kept;
}

FacetSet facets_dim1(const std::vector<Point>& pts) {
  Integer mn = pts[0][0], mx = pts[0][0];
  for (const auto& p : pts) {
    if (p[0] < mn) mn = p[0];
    if (p[0] > mx) mx = p[0];
  }
  FacetSet out;
  out.insert({Point{Integer(1)}, mx});
  out.insert({Point{Integer(-1)}, -mn});
  return out;
}

FacetSet facets_dim2(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  // explicit return type: a deduced one would be a lazy expression template
  // keeping references to temporaries
  auto cross = [](const Point& o, const Point& a, const Point& b) -> Integer {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  // monotone chain, strict turns only, counterclockwise result
  std::vector<Point> lo, hi;
  for (const auto& p : pts) {
    while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
    lo.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0) hi.pop_back();
    hi.push_back(*it);
  }
  std::vector<Point> poly(lo.begin(), lo.end() - 1);
  poly.insert(poly.end(), hi.begin(), hi.end() - 1);

  FacetSet out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    // outward normal of the ccw edge p -> q
    Point nrm = primitive(Point{q[1] - p[1], p[0] - q[0]});
    out.insert({nrm, dot(nrm, p)});
  }
  return out;
}

struct TriFace {
  int a, b, c;
  Point n;
  Integer off;
  bool alive = true;
};

// Incremental insertion with strict visibility. A reference point interior
// to the seed tetrahedron stays interior to every later hull, which fixes
// outward orientations without combinatorial bookkeeping. A point collinear
// with a horizon edge would lie on the plane of that edge's visible face and
// so could not see it strictly; hence new faces are never degenerate.
FacetSet facets_dim3(const std::vector<Point>& pts) {
  const int m = static_cast<int>(pts.size());
  int i1 = -1, i2 = -1, i3 = -1;
  for (int j = 1; j < m && i1 < 0; ++j)
    if (pts[j] != pts[0]) i1 = j;
  if (i1 < 0) throw hull_fail("seed");
  for (int j = 1; j < m && i2 < 0; ++j) {
    if (j == i1) continue;
    if (!is_zero(cross3(sub(pts[i1], pts[0]), sub(pts[j], pts[0])))) i2 = j;
  }
  if (i2 < 0) throw hull_fail("seed");
  const Point seed_n = cross3(sub(pts[i1], pts[0]), sub(pts[i2], pts[0]));
  for (int j = 1; j < m && i3 < 0; ++j) {
    if (j == i1 || j == i2) continue;
    if (dot(seed_n, sub(pts[j], pts[0])) != 0) i3 = j;
  }
  if (i3 < 0) throw hull_fail("seed");

  const Point ref = add(add(pts[0], pts[i1]), add(pts[i2], pts[i3]));  // 4x interior point

  std::vector<TriFace> faces;
  auto mk = [&](int a, int b, int c) {
    Point n = cross3(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
    if (is_zero(n)) throw hull_fail("degenerate face");
    Integer off = dot(n, pts[a]);
    const Integer t = 4 * off - dot(n, ref);
    if (t == 0) throw hull_fail("reference on face plane");
    if (t < 0) {
      n = negated(n);
      off = -off;
    }
    return TriFace{a, b, c, n, off, true};
  };
  faces.push_back(mk(0, i1, i2));
  faces.push_back(mk(0, i1, i3));
  faces.push_back(mk(0, i2, i3));
  faces.push_back(mk(i1, i2, i3));

  for (int x = 0; x < m; ++x) {
    if (x == 0 || x == i1 || x == i2 || x == i3) continue;
    std::set<int> vis;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (faces[f].alive && dot(faces[f].n, pts[x]) > faces[f].off) vis.insert(static_cast<int>(f));
    if (vis.empty()) continue;  // inside the current hull, cannot be a vertex

    std::map<std::pair<int, int>, std::vector<int>> edges;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!faces[f].alive) continue;
      const int vv[3] = {faces[f].a, faces[f].b, faces[f].c};
      for (int e = 0; e < 3; ++e) {
        const int u = vv[e], w = vv[(e + 1) % 3];
        edges[{std::min(u, w), std::max(u, w)}].push_back(static_cast<int>(f));
      }
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [e, fs] : edges) {
      if (fs.size() != 2) throw hull_fail("open surface");
      if (static_cast<int>(vis.count(fs[0])) + static_cast<int>(vis.count(fs[1])) == 1)
        horizon.push_back(e);
    }
    if (horizon.empty()) throw hull_fail("no horizon");
    for (int f : vis) faces[f].alive = false;
    for (const auto& [u, w] : horizon) faces.push_back(mk(u, w, x));
  }

  FacetSet out;
  for (const auto& f : faces) {
    if (!f.alive) continue;
    const Point n = primitive(f.n);
    out.insert({n, dot(n, pts[f.a])});
  }
  return out;
}

// Hyperplane enumeration over d-subsets; exact in every dimension, used
// directly for d >= 4 and as the fallback for d == 3.
FacetSet facets_brute(const std::vector<Point>& pts, std::size_t d) {
  const std::size_t m = pts.size();
  auto next_comb = [m](std::vector<std::size_t>& c) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] + (k - i) < m) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  FacetSet out;
  std::vector<std::size_t> c(d);
  for (std::size_t i = 0; i < d; ++i) c[i] = i;
  do {
    std::vector<Point> diffs;
    diffs.reserve(d - 1);
    for (std::size_t j = 1; j < d; ++j) diffs.push_back(sub(pts[c[j]], pts[c[0]]));
    const Lattice ker = kernel_lattice(IntMatrix::from_rows(diffs, d));
    if (ker.rank() != 1) continue;  // the subset does not span a hyperplane
    const Point w = ker.basis.column(0);  // primitive: kernels are saturated
    const Integer off = dot(w, pts[c[0]]);
    bool above = false, below = false;
    for (const auto& p : pts) {
      const Integer v = dot(w, p) - off;
      if (v > 0) above = true;
      else if (v < 0) below = true;
      if (above && below) break;
    }
    if (!above) out.insert({w, off});
    if (!below) out.insert({negated(w), -off});
  } while (next_comb(c));
  return out;
}

}  // namespace

Hull convex_hull(const PointConfiguration& a) {
  if (a.points.empty()) throw input_error("convex_hull: empty configuration");
  const std::size_t n = a.ambient_dim;
  const int d = dimension(a);
  const LatticeChart chart = make_chart(a);

  std::vector<Point> loc;
  loc.reserve(a.size());
  for (const auto& p : a.points) loc.push_back(chart.to_local(p));
  std::sort(loc.begin(), loc.end(), lex_less);
  if (static_cast<int>(loc.size()) > d + 1) loc = midpoint_prune(loc);

  FacetSet local;
  if (d == 1) {
    local = facets_dim1(loc);
  } else if (d == 2) {
    local = facets_dim2(loc);
  } else if (d == 3) {
    try {
      local = facets_dim3(loc);
    } catch (const hull_fail&) {
      local = facets_brute(loc, 3);
    }
  } else if (d >= 4) {
    local = facets_brute(loc, static_cast<std::size_t>(d));
  }

  Hull out;
  out.dim = d;
  out.vpoly.ambient_dim = n;
  out.hpoly.ambient_dim = n;

  // A local halfspace <w', y> <= b lifts to <w, x> <= b + <w, base> for any
  // w with B^T w = w'. Such a w exists because the chart basis spans a
  // saturated lattice, and it is primitive because w' is.
  const IntMatrix bt = chart.basis.transposed();
  for (const auto& [wl, offl] : local) {
    const auto w = solve_integer(bt, wl);
    if (!w) throw std::logic_error("convex_hull: chart basis not saturated");
    out.hpoly.facets.push_back({*w, offl + dot(*w, chart.base)});
  }
  std::sort(out.hpoly.facets.begin(), out.hpoly.facets.end(),
            [](const Facet& f, const Facet& g) {
              const int c = lex_compare(f.normal, g.normal);
              return c != 0 ? c < 0 : f.offset < g.offset;
            });

  const Lattice normals = kernel_lattice(bt);  // directions constant on the affine hull
  for (std::size_t j = 0; j < normals.rank(); ++j) {
    const Point w = normals.basis.column(j);
    out.hpoly.affine_hull.push_back({w, dot(w, chart.base)});
  }

  // a point is a vertex exactly when its tight constraints pin it uniquely
  for (const auto& p : a.points) {
    std::vector<Point> tight;
    for (const auto& f : out.hpoly.facets)
      if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    for (const auto& e : out.hpoly.affine_hull) tight.push_back(e.normal);
    if (lattice_span(tight, n).rank() == n) out.vpoly.vertices.push_back(p);
  }
  return out;
}

namespace {

std::vector<Point> box_scan(const Hull& h, bool interior) {
  const std::size_t n = h.vpoly.ambient_dim;
  struct Cons {
    Point a;
    Integer b;  // <a, x> <= b
  };
  std::vector<Cons> cons;
  for (const auto& f : h.hpoly.facets)
    cons.push_back({f.normal, interior ? f.offset - 1 : f.offset});
  for (const auto& e : h.hpoly.affine_hull) {
    cons.push_back({e.normal, e.value});
    cons.push_back({negated(e.normal), -e.value});
  }

  std::vector<Integer> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = hi[j] = h.vpoly.vertices[0][j];
    for (const auto& v : h.vpoly.vertices) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }

  std::vector<Point> out;
  Point x(n, Integer(0));
  std::function<void(std::size_t, const std::vector<Integer>&)> rec =
      [&](std::size_t j, const std::vector<Integer>& part) {
        if (j == n) {
          for (std::size_t i = 0; i < cons.size(); ++i)
            if (part[i] > cons[i].b) return;
          out.push_back(x);
          return;
        }
        Integer l = lo[j], r = hi[j];
        for (std::size_t i = 0; i < cons.size() && l <= r; ++i) {
          const Integer& aj = cons[i].a[j];
          if (aj == 0) continue;
          // interval bound: remaining coordinates at their extremes
          Integer rest = 0;
          for (std::size_t t = j + 1; t < n; ++t) {
            const Integer& at = cons[i].a[t];
            if (at > 0) rest += at * lo[t];
            else if (at < 0) rest += at * hi[t];
          }
          const Integer room = cons[i].b - part[i] - rest;  // aj * xj <= room
          if (aj > 0) {
            const Integer ub = floor_div(room, aj);
            if (ub < r) r = ub;
          } else {
            const Integer lb = ceil_div(room, aj);
            if (lb > l) l = lb;
          }
        }
        for (Integer v = l; v <= r; ++v) {
          x[j] = v;
          std::vector<Integer> np = part;
          for (std::size_t i = 0; i < cons.size(); ++i)
            if (cons[i].a[j] != 0) np[i] += cons[i].a[j] * v;
          rec(j + 1, np);
        }
      };
  rec(0, std::vector<Integer>(cons.size(), Integer(0)));
  return out;
}

}  // namespace

std::vector<Point> lattice_points(const VPolytope& p) {
  const auto a = PointConfiguration::make(p.ambient_dim, p.vertices);
  return box_scan(convex_hull(a), false);
}

std::vector<Point> interior_lattice_points(const VPolytope& p) {
  const auto a = PointConfiguration::make(p.ambient_dim, p.vertices);
  const Hull h = convex_hull(a);
  if (h.dim < static_cast<int>(p.ambient_dim)) return {};
  return box_scan(h, true);
}

namespace {

// pulling triangulation: cone the lex-least vertex over triangulations of
// the facets it misses; returns tuples of dim+1 affinely independent points
std::vector<std::vector<Point>> triangulate(const PointConfiguration& a) {
  const Hull h = convex_hull(a);
  if (h.dim <= 0) return {{h.vpoly.vertices.at(0)}};
  const Point& v0 = h.vpoly.vertices.front();
  std::vector<std::vector<Point>> out;
  for (const auto& f : h.hpoly.facets) {
    if (dot(f.normal, v0) == f.offset) continue;
    std::vector<Point> fv;
    for (const auto& v : h.vpoly.vertices)
      if (dot(f.normal, v) == f.offset) fv.push_back(v);
    for (auto s : triangulate(PointConfiguration::make(a.ambient_dim, fv))) {
      s.insert(s.begin(), v0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

Integer normalized_volume(const VPolytope& p) {
  const std::size_t n = p.ambient_dim;
  const auto a = PointConfiguration::make(n, p.vertices);
  if (dimension(a) < static_cast<int>(n)) return Integer(0);
  Integer total = 0;
  for (const auto& s : triangulate(a)) {
    std::vector<Point> diffs;
    diffs.reserve(n);
    for (std::size_t i = 1; i < s.size(); ++i) diffs.push_back(sub(s[i], s[0]));
    const Integer det = determinant(IntMatrix::from_columns(diffs, n));
    total += det < 0 ? -det : det;
  }
  return total;
}

int codegree(const VPolytope& p) {
  const std::size_t n = p.ambient_dim;
  const auto a = PointConfiguration::make(n, p.vertices);
  if (dimension(a) < static_cast<int>(n))
    throw precondition_error("codegree requires a full-dimensional polytope");
  for (int c = 1; c <= static_cast<int>(n) + 1; ++c)
    if (!interior_lattice_points(dilate(p, c)).empty()) return c;
  throw std::logic_error("codegree: dilation bound exceeded");
}

namespace {

IntMatrix minor_drop(const IntMatrix& m, std::size_t dr, std::size_t dc) {
  IntMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == dr) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == dc) continue;
      out.at(oi, oj) = m.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

}  // namespace

LatticeWidthResult lattice_width(const VPolytope& p) {
  const std::size_t n = p.ambient_dim;
  const auto a = PointConfiguration::make(n, p.vertices);
  const Hull h = convex_hull(a);
  if (h.dim < static_cast<int>(n))
    throw precondition_error("lattice_width requires a full-dimensional polytope");
  const auto& vs = h.vpoly.vertices;

  auto width_of = [&vs](const Point& w) -> Integer {
    Integer mn = dot(w, vs[0]), mx = mn;
    for (const auto& v : vs) {
      const Integer t = dot(w, v);
      if (t < mn) mn = t;
      if (t > mx) mx = t;
    }
    return mx - mn;
  };

  Integer best_w = -1;
  Point best_dir;
  for (std::size_t j = 0; j < n; ++j) {
    Point ej(n, Integer(0));
    ej[j] = 1;
    const Integer wd = width_of(ej);
    if (best_w < 0 || wd < best_w) {
      best_w = wd;
      best_dir = ej;
    }
  }
  // full-dimensional polytopes have width >= 1, so 1 cannot be beaten
  if (best_w == 1) return {best_w, best_dir, Integer(0)};

  // Any direction at least as good as the best axis pairs with n independent
  // vertex differences d_i via |<w, d_i>| <= best_w, so with D the matrix of
  // those rows, ||w||_inf <= best_w * ||D^-1||_inf. Short differences keep
  // the bound small.
  std::vector<Point> diffs;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) diffs.push_back(sub(vs[j], vs[i]));
  std::sort(diffs.begin(), diffs.end(), [](const Point& x, const Point& y) {
    Integer nx = 0, ny = 0;
    for (const auto& t : x) nx = std::max(nx, t < 0 ? Integer(-t) : t);
    for (const auto& t : y) ny = std::max(ny, t < 0 ? Integer(-t) : t);
    return nx != ny ? nx < ny : lex_less(x, y);
  });
  std::vector<Point> rows;
  for (const auto& dv : diffs) {
    if (rows.size() == n) break;
    std::vector<Point> trial = rows;
    trial.push_back(dv);
    if (lattice_span(trial, n).rank() == trial.size()) rows = std::move(trial);
  }
  const IntMatrix dm = IntMatrix::from_rows(rows, n);
  const Integer det = determinant(dm);
  const Integer adet = det < 0 ? -det : det;

  Integer max_row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer rs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer md = determinant(minor_drop(dm, j, i));
      rs += md < 0 ? -md : md;
    }
    if (rs > max_row) max_row = rs;
  }
  const Integer bound = floor_div(best_w * max_row, adet);

  Point w(n, Integer(0));
  std::function<void(std::size_t)> go = [&](std::size_t j) {
    if (j == n) {
      std::size_t f = 0;
      while (f < n && w[f] == 0) ++f;
      if (f == n || w[f] < 0) return;  // one representative per +-w pair
      if (content(w) != 1) return;
      const Integer wd = width_of(w);
      if (wd < best_w || (wd == best_w && lex_less(w, best_dir))) {
        best_w = wd;
        best_dir = w;
      }
      return;
    }
    for (Integer v = -bound; v <= bound; ++v) {
      w[j] = v;
      go(j + 1);
    }
  };
  go(0);
  return {best_w, best_dir, bound};
}

PointConfiguration project_config(const PointConfiguration& a, const LatticeProjection& pi) {
  if (pi.matrix.cols() != a.ambient_dim || pi.basepoint.size() != a.ambient_dim)
    throw input_error("project_config: dimension mismatch");
  std::vector<Point> imgs;
  imgs.reserve(a.size());
  for (const auto& p : a.points) imgs.push_back(pi.apply(p));
  return PointConfiguration::make(pi.matrix.rows(), imgs);
}

VPolytope dilate(const VPolytope& p, const Integer& c) {
  if (c < 0) throw input_error("dilate requires a non-negative factor");
  std::set<Point> vs;
  for (const auto& v : p.vertices) vs.insert(scaled(c, v));
  return {p.ambient_dim, std::vector<Point>(vs.begin(), vs.end())};
}

VPolytope to_vpolytope(const PointConfiguration& a) { return convex_hull(a).vpoly; }

}  // namespace latdef
